#include "loopfield/propagator.hpp"

namespace loopfield {

namespace {
constexpr double kNorm = 1.0 / (kTwoPi * kTwoPi * kTwoPi);

IntegralResult to_real_commutator(IntegralResult r) {
  r.value = Complex(2.0 * r.value.imag(), 0.0);
  r.error *= 2.0;
  return r;
}
}  // namespace

IntegralResult inner0(const TwoForm& G1, const TwoForm& G2,
                      const QuadratureSpec& spec) {
  auto M = [&](const Vec4& p) -> Complex {
    const CVec4 u1 = G1.contraction(p);
    const CVec4 u2 = G2.contraction(p);
    return -minkowski_herm(u1, u2);
  };
  IntegralResult r = lightcone_integrate(M, ConeBranch::PositiveEnergy, spec);
  r.value *= kNorm;
  r.error *= kNorm;
  return r;
}

IntegralResult pauli_jordan(const TwoForm& G1, const TwoForm& G2,
                            const QuadratureSpec& spec) {
  return to_real_commutator(inner0(G1, G2, spec));
}

IntegralResult roberts(const TwoForm& G1, const TwoForm& G2,
                       const QuadratureSpec& spec) {
  return pauli_jordan(G1, hodge_star(G2), spec);
}

IntegralResult two_point_oneform(const OneForm& g1, const OneForm& g2,
                                 const QuadratureSpec& spec) {
  auto M = [&](const Vec4& p) -> Complex {
    const CVec4 u1 = g1.momentum(p);
    const CVec4 u2 = g2.momentum(p);
    return -minkowski_herm(u1, u2);
  };
  IntegralResult r = lightcone_integrate(M, ConeBranch::PositiveEnergy, spec);
  r.value *= kNorm;
  r.error *= kNorm;
  return r;
}

}  // namespace loopfield
