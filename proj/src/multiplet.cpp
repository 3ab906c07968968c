#include "loopfield/multiplet.hpp"

#include <cmath>

#include "loopfield/errors.hpp"

namespace loopfield {

namespace {

void accumulate(IntegralResult& acc, const IntegralResult& term, double coef) {
  acc.value += coef * term.value;
  acc.error += std::abs(coef) * term.error;
  acc.nodes += term.nodes;
  acc.converged = acc.converged && term.converged;
}

template <typename Pairing>
IntegralResult zeta_combination(const DoubletForm& g1, const DoubletForm& g2,
                                double zeta, Pairing&& pairing) {
  IntegralResult acc{};
  if (g1.u && g2.u)
    accumulate(acc, pairing(g1.u->coprimitive_sum(), g2.u->coprimitive_sum()),
               1.0);
  if (g1.d && g2.d)
    accumulate(acc, pairing(g1.d->coprimitive_sum(), g2.d->coprimitive_sum()),
               1.0);
  if (zeta != 0.0) {
    if (g1.u && g2.d)
      accumulate(acc,
                 pairing(g1.u->coprimitive_sum(),
                         hodge_star(g2.d->coprimitive_sum())),
                 zeta);
    if (g1.d && g2.u)
      accumulate(acc,
                 pairing(g1.d->coprimitive_sum(),
                         hodge_star(g2.u->coprimitive_sum())),
                 -zeta);
  }
  return acc;
}

}  // namespace

IntegralResult zeta_inner(const DoubletForm& g1, const DoubletForm& g2,
                          double zeta, const QuadratureSpec& spec) {
  return zeta_combination(g1, g2, zeta, [&](const TwoForm& A, const TwoForm& B) {
    return inner0(A, B, spec);
  });
}

IntegralResult zeta_commutator(const DoubletForm& g1, const DoubletForm& g2,
                               double zeta, const QuadratureSpec& spec) {
  return zeta_combination(g1, g2, zeta, [&](const TwoForm& A, const TwoForm& B) {
    return pauli_jordan(A, B, spec);
  });
}

DoubletForm so2_rotate(const DoubletForm& g, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  auto combine = [&](const std::optional<DecomposedOneForm>& a, double ca,
                     const std::optional<DecomposedOneForm>& b,
                     double cb) -> std::optional<DecomposedOneForm> {
    constexpr double kDrop = 1e-14;
    std::vector<OneFormPiece> pieces;
    if (a && std::abs(ca) > kDrop)
      for (const auto& e : a->entries()) pieces.push_back(e.piece.scaled(ca));
    if (b && std::abs(cb) > kDrop)
      for (const auto& e : b->entries()) pieces.push_back(e.piece.scaled(cb));
    if (pieces.empty()) return std::nullopt;
    return DecomposedOneForm::build(std::move(pieces));
  };
  DoubletForm out;
  out.u = combine(g.u, c, g.d, s);
  out.d = combine(g.u, -s, g.d, c);
  return out;
}

OmegaZetaResult omega_zeta(double a, const DoubletForm& g, double zeta,
                           const QuadratureSpec& spec) {
  OmegaZetaResult res;
  res.nonpositive_regime = std::abs(zeta) > 1.0;
  const IntegralResult q = zeta_inner(g, g, zeta, spec);
  res.q = q.value.real();
  res.q_error = q.error;
  res.converged = q.converged;
  if (!res.nonpositive_regime && res.q < -std::max(4.0 * res.q_error, 1e-12))
    throw PositivityViolationError(
        "<g,g>_zeta is negative beyond the error tolerance inside |zeta| <= 1");
  res.value = a == 0.0 ? 1.0 : std::exp(-0.5 * a * a * res.q);
  return res;
}

}  // namespace loopfield
