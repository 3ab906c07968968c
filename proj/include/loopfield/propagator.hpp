#pragma once
// Free-field pairings on the light cone.
//
//   inner0(G1,G2)  = -(2 pi)^{-3} \int d^4p theta(p0) dlt(p^2)
//                      eta(conj(p G1-hat(p)), (p G2-hat(p)))
//
// the one-particle scalar product (the sign makes inner0(G,G) >= 0: the
// contraction u = p G-hat is orthogonal to the null p, so eta(conj u, u) <= 0
// pointwise).
//
//   pauli_jordan(G1,G2) = 2 Im inner0(G1,G2)
//
// the real commutator value: for real forms the signed-energy integral of the
// source formula equals 2i Im inner0, and all commutator-type quantities here
// report that real number.
//
//   roberts(G1,G2) = pauli_jordan(G1, *G2)    (symmetric in G1, G2)
//
//   two_point(g1,g2) = -(2 pi)^{-3} \int d^4p theta(p0) dlt(p^2)
//                        eta(conj(g1-hat(p)), g2-hat(p))
//
// the two-point function of the potential evaluated on one-form evaluators
// directly (real test forms assumed: g-hat(-p) = conj g-hat(p)).

#include "loopfield/forms.hpp"
#include "loopfield/quadrature.hpp"

namespace loopfield {

IntegralResult inner0(const TwoForm& G1, const TwoForm& G2,
                      const QuadratureSpec& spec);

IntegralResult pauli_jordan(const TwoForm& G1, const TwoForm& G2,
                            const QuadratureSpec& spec);

IntegralResult roberts(const TwoForm& G1, const TwoForm& G2,
                       const QuadratureSpec& spec);

IntegralResult two_point_oneform(const OneForm& g1, const OneForm& g2,
                                 const QuadratureSpec& spec);

}  // namespace loopfield
