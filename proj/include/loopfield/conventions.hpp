#pragma once
// Fixed conventions, used everywhere.  Changing any constant here must break
// the convention self-test suite (tests/unit/test_exterior.cpp).
//
//   metric       eta = diag(+1,-1,-1,-1)
//   orientation  eps_{0123} = +1
//   components   all tensors are stored with upper (contravariant) indices
//   Fourier      fhat(p) = \int d^4x e^{i p.x} f(x),  p.x = p^0 x^0 - pvec.xvec
//                so a factor in x^0 transforms at +p^0, a factor in x^j at -p^j
//   co-derivative (generalised divergence)
//                on 1-forms:  (dlt g)      = d_mu g^mu
//                on 2-forms:  (dlt G)^mu   = d_nu G^{mu nu}
//                This is the unique sign for which both canonical families
//                satisfy dlt G = g with the component functions as stored.
//                In momentum space (dlt G)^mu(p) = -i p_nu Ghat^{mu nu}(p).
//   Hodge star   on 2-forms (upper components, see star tables below):
//                (*G)^{01} = -G^{23}  (*G)^{02} = +G^{13}  (*G)^{03} = -G^{12}
//                (*G)^{12} = +G^{03}  (*G)^{13} = -G^{02}  (*G)^{23} = +G^{01}
//                hence ** = -1 on 2-forms, exactly.
//   commutator   all commutator-type quantities are reported as the real
//                number 2 Im <G1,G2>_0; the overall sign is a convention of
//                this library (the source formulas fix it only up to sign).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace loopfield {

using Vec4 = std::array<double, 4>;
using CVec4 = std::array<std::complex<double>, 4>;
using Complex = std::complex<double>;

// eta_{mu nu} as a sign: +1 for mu=0, -1 for spatial
inline constexpr double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

inline double minkowski(const Vec4& u, const Vec4& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

inline Complex minkowski(const CVec4& u, const CVec4& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

// eta(conj u, v); the sesquilinear Lorentz pairing
inline Complex minkowski_herm(const CVec4& u, const CVec4& v) {
  return std::conj(u[0]) * v[0] - std::conj(u[1]) * v[1] -
         std::conj(u[2]) * v[2] - std::conj(u[3]) * v[3];
}

// p_mu from p^mu
inline Vec4 lower(const Vec4& p) { return {p[0], -p[1], -p[2], -p[3]}; }

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(double s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

// Antisymmetric pair storage: component pairs (mu<nu) in fixed order.
inline constexpr std::array<int, 6> kPairFirst{0, 0, 0, 1, 1, 2};
inline constexpr std::array<int, 6> kPairSecond{1, 2, 3, 2, 3, 3};

// pair index for (mu,nu), mu != nu; sign = +1 if mu<nu else -1
inline int pair_index(int mu, int nu, double& sign) {
  sign = 1.0;
  if (mu > nu) {
    std::swap(mu, nu);
    sign = -1.0;
  }
  if (mu == 0) return nu - 1;          // (0,1)(0,2)(0,3) -> 0,1,2
  if (mu == 1) return nu + 1;          // (1,2)(1,3)      -> 3,4
  return 5;                            // (2,3)
}

// Hodge star on stored pairs: out[i] = kStarSign[i] * in[kStarMap[i]]
inline constexpr std::array<int, 6> kStarMap{5, 4, 3, 2, 1, 0};
inline constexpr std::array<double, 6> kStarSign{-1.0, +1.0, -1.0, +1.0, -1.0, +1.0};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

}  // namespace loopfield
