#pragma once
// Loop functions, the canonical family and its co-primitives, spanning-disk
// co-primitives, and the Gauss linking number.
//
// Canonical family (plane (i,k), axis l, scalar factors alpha(x0), beta(x_l),
// radial factor b), with the loop-integral normalization (the magnetic member
// equals the loop function of the unit circle with the induced smear):
//
//   g^(ik)^mu = 2 pi (-dlt_{mu i} x_k + dlt_{mu k} x_i) a(x0,x_l) c(x_i^2+x_k^2)
//   G^(ik)^{mu nu} = 2 pi 2^{-1}(dlt_{mu k} dlt_{nu i} - dlt_{nu k} dlt_{mu i})
//                    a(x0,x_l) C(x_i^2+x_k^2)
//   g^(0l)^mu = 2 pi (dlt_{mu 0} d_l - dlt_{mu l} d_0) a(x0,x_l) c(...)
//   G^(0l)^{mu nu} = 2 pi (dlt_{mu 0} dlt_{nu l} - dlt_{nu 0} dlt_{mu l})
//                    a(x0,x_l) c(...)
//
// with a(x0,x_l) = alpha(x0) beta(x_l).

#include <variant>

#include "loopfield/forms.hpp"

namespace loopfield {

struct CircleLoop {
  int ci = 1, ck = 2;      // spatial plane
  double radius = 1.0;
  Vec4 center{};           // center[0] = loop time
  int traversals = 1;      // signed winding count

  Vec4 point(double t) const;    // gamma(t), t in [0,1]
  Vec4 tangent(double t) const;  // dgamma/dt
  void validate() const;
};

// scalar smear: product of four 1D profiles
struct SmearProduct {
  std::array<Profile1D, 4> f{Profile1D::bump(0, 1), Profile1D::bump(0, 1),
                             Profile1D::bump(0, 1), Profile1D::bump(0, 1)};
};

// the canonical product structure s^(ikl)(x) = alpha(x0) beta(x_l) b(x_i^2+x_k^2)
struct SmearSikl {
  int ci = 1, ck = 2, cl = 3;
  Profile1D alpha = Profile1D::bump(0, 0.1);
  Profile1D beta = Profile1D::bump(0, 0.1);
  Profile1D b = Profile1D::bump(0, 0.04);
};

using Smear = std::variant<SmearProduct, SmearSikl>;

double smear_integral(const Smear& s);

// l_{s,gamma}(x) = \int_0^1 dt s(x - gamma(t)) gammadot(t)
OneFormPiece loop_function(const Smear& s, const CircleLoop& loop);

struct CanonicalSpec {
  int ci = 1, ck = 2, cl = 3;
  Profile1D alpha = Profile1D::bump(0, 0.1);
  Profile1D beta = Profile1D::bump(0, 0.1);
  Profile1D b = Profile1D::bump(0, 0.04);
  Vec4 shift{};  // translation applied to the whole construction
};

// magnetic member g^(ik) with exact co-primitive G^(ik) and class value kappa
OneFormPiece canonical_g(const CanonicalSpec& spec);

// electric partner g^(0l) with co-primitive G^(0l) (trivial class, kappa = 0)
OneFormPiece canonical_g0(const CanonicalSpec& spec);

// flat-disk co-primitive of loop_function(s, loop) for planar circles:
// the (i,k) component is the u-weighted smear of the spanning disk
TwoForm disk_coprimitive(const Smear& s, const CircleLoop& loop);

struct LinkingResult {
  int value = 0;
  double raw = 0.0;
};

// Gauss double integral for two disjoint equal-time loops, rounded to the
// nearest integer; |raw - value| must be < 0.01
LinkingResult gauss_linking(const CircleLoop& a, const CircleLoop& b);

}  // namespace loopfield
