#pragma once
// Two-field multiplet: the zeta-deformed inner product on doublets,
//
//   <g1,g2>_zeta = <G1u,G2u>_0 + <G1d,G2d>_0
//                  + zeta <G1u, *G2d>_0 - zeta <G1d, *G2u>_0,
//
// its commutator structure (the same combination of pauli_jordan values),
// the SO(2) action, and the generating functional omega_zeta.  Doublets
// reuse single-field pieces wholesale; no quadrature code of its own.

#include "loopfield/charge.hpp"

namespace loopfield {

IntegralResult zeta_inner(const DoubletForm& g1, const DoubletForm& g2,
                          double zeta, const QuadratureSpec& spec);

IntegralResult zeta_commutator(const DoubletForm& g1, const DoubletForm& g2,
                               double zeta, const QuadratureSpec& spec);

// (R(th)g)_u = cos th g_u + sin th g_d, (R(th)g)_d = -sin th g_u + cos th g_d
DoubletForm so2_rotate(const DoubletForm& g, double theta);

struct OmegaZetaResult {
  double value = 1.0;
  double q = 0.0;           // <g,g>_zeta
  double q_error = 0.0;
  bool converged = true;
  bool nonpositive_regime = false;  // |zeta| > 1
};

// omega_zeta(V2(a,g)) = exp(-a^2 <g,g>_zeta / 2); values outside |zeta| <= 1
// are computed but flagged; a genuinely negative q inside the regime is a
// positivity violation
OmegaZetaResult omega_zeta(double a, const DoubletForm& g, double zeta,
                           const QuadratureSpec& spec);

}  // namespace loopfield
