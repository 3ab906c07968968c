#pragma once
// Light-cone momentum quadrature:
//
//   PositiveEnergy: \int d^4p theta(p0) dlt(p^2) M(p)
//                 = \int d^3p (2|pvec|)^{-1} M(|pvec|, pvec)
//   SignedEnergy:   \int d^4p eps(p0) dlt(p^2) M(p)
//                 = \int d^3p (2|pvec|)^{-1} [M(|pvec|,pvec) - M(-|pvec|,pvec)]
//
// Spherical coordinates: composite Gauss-Legendre in |pvec| (panels
// concentrated below a width-scaled split radius), product Gauss-Legendre in
// cos(theta) x periodic trapezoid in phi.  The error estimate is the
// difference against one refinement step (doubled panel count and angular
// orders); the refined value is reported.
//
// Parallel evaluation fills per-shell angular sums independently; every
// reduction is a fixed pairwise tree, so results are bit-identical across
// runs and thread counts.

#include <functional>

#include "loopfield/conventions.hpp"
#include "loopfield/numerics.hpp"

namespace loopfield {

struct QuadratureSpec {
  int radial_order = 12;    // Gauss-Legendre nodes per radial panel
  int radial_panels = 32;
  double r_max = 80.0;      // must stay below kTransformRange
  double r_split = 24.0;    // 3/4 of the panels resolve [0, r_split]
  int theta_order = 24;     // Gauss-Legendre in cos(theta)
  int phi_order = 48;       // trapezoid nodes in phi (multiple of 4)
  double target_rel_tol = 1e-6;
  double target_abs_tol = 1e-9;
  int threads = 1;

  static QuadratureSpec standard();  // hopf-grade
  static QuadratureSpec fast();      // suite-grade
  static QuadratureSpec locality(); // high angular resolution, far translations

  QuadratureSpec refined() const;
  QuadratureSpec with_threads(int t) const;
};

struct IntegralResult {
  Complex value{};
  double error = 0.0;       // |refined - base|, componentwise max
  long nodes = 0;
  bool converged = true;    // error within target tolerances

  double real() const { return value.real(); }
};

enum class ConeBranch { PositiveEnergy, SignedEnergy };

using MomentumIntegrand = std::function<Complex(const Vec4& p)>;

IntegralResult lightcone_integrate(const MomentumIntegrand& M, ConeBranch branch,
                                   const QuadratureSpec& spec);

}  // namespace loopfield
