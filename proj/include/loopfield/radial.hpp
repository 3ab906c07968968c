#pragma once
// Radial machinery derived from a scalar factor b supported near 0:
//
//   c(r^2) = |r|^{-1} \int_0^1 dt cos(2 pi t) b(r^2 - 2 r cos(2 pi t) + 1)
//   C(r^2) = -\int_{r^2}^inf du c(u)
//
// c is supported in the band | |r| - 1 | <= sqrt(|center_b| + width_b); C is
// constant (the plateau) below the band and zero above it, with dC/du = c.
//
// The tables also carry the 2D radial transforms needed by the momentum
// evaluators, for f in {c, C, b}:
//
//   H0[f](q) = 2 pi \int_0^inf dr r   J0(q r) f(r^2)
//   H1[f](q) = 2 pi \int_0^inf dr r^2 J1(q r) f(r^2)
//
// All tables are built for the amplitude-normalized b and cached on disk;
// callers multiply by amplitude(b) so scaling stays exact.

#include <cstdint>
#include <memory>

#include "loopfield/numerics.hpp"
#include "loopfield/profile.hpp"

namespace loopfield {

enum class RadialKind { c, C, b };

struct HankelTable {
  Interp1D h0, h1;
  double M1 = 0, M3 = 0, M5 = 0, M7 = 0;  // \int r^k f(r^2) dr, small-q series
  double series_cut = 0.2;

  double H0(double q) const;
  double H1(double q) const;
  double H1_over_q(double q) const;  // finite at q = 0
};

class RadialTables {
 public:
  // b must be compactly supported with support_radius + |center| < 1
  // (otherwise the |r|^{-1} factor would be met inside the support);
  // amplitude of b is divided out.
  static std::shared_ptr<const RadialTables> make(const Profile1D& b);

  double band_lo() const { return band_lo_; }
  double band_hi() const { return band_hi_; }
  double band_halfwidth() const { return 0.5 * (band_hi_ - band_lo_); }
  double plateau() const { return plateau_; }

  // position-space values as functions of r^2 (unit b amplitude)
  double c_at_r2(double r2) const;
  double C_at_r2(double r2) const;
  double c_deriv_u(double r2) const;  // d c(u)/du at u = r^2

  const HankelTable& hankel(RadialKind k) const;

  std::uint64_t key() const { return key_; }

 private:
  RadialTables() = default;

  double band_lo_ = 0, band_hi_ = 0, r_hi_ = 0, plateau_ = 0;
  Interp1D c_pos_;  // c(r^2) sampled in r over the band
  Interp1D C_pos_;  // C(r^2) sampled in r over [0, r_hi]
  HankelTable Hc_, HC_, Hb_;
  std::uint64_t key_ = 0;
};

// direct (uncached) evaluations; these are the spec-level operations and the
// reference path for the tabulated values
double radial_c(const Profile1D& b, double r2, int t_nodes = 4096);
double radial_C(const Profile1D& b, double r2);

}  // namespace loopfield
