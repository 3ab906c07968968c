#pragma once
// Scalar 1D profiles: the building blocks a, b, s, alpha, beta of all test
// forms.  Default kind is the compactly supported bump
//     A * exp(-w^2 / (w^2 - (x-c)^2)),   |x-c| < w,
// gaussians are offered as a controlled approximation of it (compact-support
// invariants then hold only up to tail tolerance), and dirac_limit exists
// only for momentum-space use (its position evaluation is an error).
//
// Fourier transforms F(w) = \int dx e^{iwx} p(x) of bump profiles are
// tabulated once per (shape, range) and cached on disk; gaussian and dirac
// transforms are closed-form.  Amplitude is excluded from the table key and
// multiplied at evaluation, so scaling a profile scales every transform
// exactly.

#include <complex>
#include <cstdint>
#include <memory>

#include "loopfield/conventions.hpp"
#include "loopfield/numerics.hpp"

namespace loopfield {

enum class ProfileKind { Bump, Gaussian, DiracLimit };

class Profile1D {
 public:
  static Profile1D bump(double center, double width, double amplitude = 1.0);
  static Profile1D gaussian(double center, double width, double amplitude = 1.0);
  static Profile1D dirac_limit(double center, double amplitude = 1.0);

  ProfileKind kind() const { return kind_; }
  double center() const { return center_; }
  double width() const { return width_; }
  double amplitude() const { return amplitude_; }

  // position evaluation; throws NotDifferentiableError-adjacent errors for
  // dirac_limit (pointwise evaluation of the limit profile is forbidden)
  double value(double x) const;
  double derivative(double x) const;

  // exact 0 outside [center - support_radius, center + support_radius];
  // gaussians report a tail cut (8.5 sigma) and compact() == false
  double support_radius() const;
  bool compact() const { return kind_ != ProfileKind::Gaussian; }

  double integral() const;
  Profile1D normalized() const;        // same shape, integral == 1
  Profile1D scaled(double s) const;    // amplitude *= s
  Profile1D shifted(double dc) const;  // center += dc

  // F(w) = \int dx e^{iwx} p(x); dirac_limit -> amplitude * e^{iw center}
  Complex fourier(double omega) const;

  // hash of everything but the amplitude
  std::uint64_t shape_hash() const;

  bool operator==(const Profile1D&) const = default;

 private:
  Profile1D(ProfileKind k, double c, double w, double a);
  void ensure_table() const;

  ProfileKind kind_;
  double center_, width_, amplitude_;
  mutable std::shared_ptr<const Interp1D> table_;  // centered unit-amp transform
};

// maximum |omega| covered by cached transform tables (light-cone quadratures
// must keep r_max below this)
inline constexpr double kTransformRange = 260.0;

}  // namespace loopfield
