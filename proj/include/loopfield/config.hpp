#pragma once
// Experiment configuration: versioned JSON schema with embedded defaults.
// Unknown keys are rejected; physical lengths must be positive.  The default
// configuration reproduces the canonical Hopf experiment with one command.

#include <cstdint>
#include <string>

#include "loopfield/charge.hpp"
#include "loopfield/quadrature.hpp"

namespace loopfield {

struct ScanSpec {
  std::string param = "eta";  // eta | zeta | separation | width | a
  double from = 0.0;
  double to = 1.0;
  int steps = 11;
};

struct ExperimentConfig {
  int schema_version = 1;

  // profiles: a(x0,xl) = alpha(x0) beta(xl), both bump(0, a_width)
  // normalized to unit integral; radial factor b = bump(0, b_width)
  double a_width = 0.1;
  double b_width = 0.04;
  double b_amplitude = 1.0;
  double smear_amplitude = 1.0;  // extra amplitude on the first loop's smear

  // loop geometry
  std::array<int, 2> plane1{1, 2};
  int axis1 = 3;
  std::array<int, 2> plane2{1, 3};
  int axis2 = 2;
  double radius = 1.0;
  Vec4 translation{0.0, 1.0, 0.0, 0.0};
  int traversal1 = 1;
  int traversal2 = 1;

  double eta = 0.0;   // 0 -> automatic: 1.25 * eta_threshold
  double zeta = 1.0;
  double weyl_a = 1.0;

  QuadratureSpec quadrature = QuadratureSpec::standard();
  QuadratureSpec fast_quadrature = QuadratureSpec::fast();

  int threads = 1;
  std::uint64_t seed = 20260809;
  std::string out_dir = ".";
  std::string cache_dir;

  ScanSpec scan;

  static ExperimentConfig from_json_file(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
  void validate() const;
};

// the experiment objects built from a configuration
struct HopfExperiment {
  CanonicalSpec cs1;        // magnetic member on loop 1
  CanonicalSpec cs2;        // magnetic member on loop 2 (translated)
  CircleLoop loop1, loop2;
  double eta = 0.0;         // resolved value (auto -> 1.25 eta*)
  double eta_star = 0.0;

  OneFormPiece g12;         // canonical magnetic piece, loop 1
  OneFormPiece g03;         // canonical electric partner, loop 1
  OneFormPiece mixed;       // g12 + eta g03
  OneFormPiece g13;         // canonical magnetic piece, loop 2
};

HopfExperiment build_hopf_experiment(const ExperimentConfig& cfg);

}  // namespace loopfield
