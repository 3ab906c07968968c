#pragma once
// Topological potential machinery: branch selection th+/th-, assembly of
// G_T, the central commutator, generating functionals, the eta-mixing
// threshold, and the reduced 1D oracle
//
//   J(e1) = \int dz z c(z^2) C((z - e1)^2),
//
// the value of the Roberts term for the canonical Hopf configuration in the
// a -> delta limit up to the fixed constant -2 pi^2 (with unit-integral a
// factors; pinned by the conventions tests).

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loopfield/loops.hpp"
#include "loopfield/propagator.hpp"

namespace loopfield {

enum class BranchTag { Electric, Magnetic };

inline const char* branch_name(BranchTag b) {
  return b == BranchTag::Electric ? "electric" : "magnetic";
}

struct TaggedPiece {
  OneFormPiece piece;
  TwoForm coprimitive;
  BranchTag branch;
  double indicator = 0.0;
};

// g = sum_n g_n with pairwise disjoint connected supports, each piece
// carrying a co-primitive and a branch tag.  Near-null pieces are rejected.
class DecomposedOneForm {
 public:
  static DecomposedOneForm build(std::vector<OneFormPiece> pieces,
                                 double indicator_rel_tol = 1e-9);
  static DecomposedOneForm single(const OneFormPiece& piece,
                                  double indicator_rel_tol = 1e-9);

  const std::vector<TaggedPiece>& entries() const { return entries_; }
  bool single_piece() const { return entries_.size() == 1; }

  OneForm oneform() const;
  TwoForm coprimitive_sum() const;  // plain co-primitive of the whole g
  SupportRegion support() const;
  DecomposedOneForm scaled(double s) const;  // drops the form if s == 0

 private:
  std::vector<TaggedPiece> entries_;
};

// G_T = sum_n ( th+ G_n + th- *G_n )
TwoForm build_GT(const DecomposedOneForm& g);

// doublet over C_1 + C_1; operations live in multiplet.hpp
struct DoubletForm {
  std::optional<DecomposedOneForm> u, d;
};

using FieldArg = std::variant<DecomposedOneForm, DoubletForm>;

// eta* = sqrt(-indicator(Gm)/indicator(Ge)); requires indicator(Gm) < 0 <
// indicator(Ge)
double eta_threshold(const TwoForm& Gm, const TwoForm& Ge);

// the reduced 1D integral; b enters both radial factors (overload with two
// profiles exposes the bilinear structure)
double reduced_roberts_oracle(const Profile1D& b, double e1);
double reduced_roberts_oracle(const Profile1D& b_c, const Profile1D& b_C,
                              double e1);

// Roberts value of the canonical Hopf configuration in the a -> delta limit
// equals kRobertsOracleConstant * reduced_roberts_oracle(b, e1)
inline constexpr double kRobertsOracleConstant = -2.0 * kPi * kPi;

struct RichardsonResult {
  double value = 0.0;
  double order = 0.0;
  bool order_estimated = false;  // false when the ladder is below noise
};

// extrapolate a width ladder (w, w/2, w/4) to zero width, estimating the
// order from the ladder itself; falls back to the finest value when the
// differences are below noise
RichardsonResult richardson_extrapolate(double v_w, double v_w2, double v_w4,
                                        double noise_floor = 0.0);

// ---------------------------------------------------------------------------
// reports

struct ReportValue {
  std::string name;
  double value = 0.0;
  double error = 0.0;
  long nodes = 0;
  bool converged = true;
  bool quadrature = false;  // value carries a quadrature error estimate

  static ReportValue plain(std::string n, double v);
  static ReportValue integral(std::string n, const IntegralResult& r);
};

struct ChargeReport {
  std::string title;
  std::vector<std::string> notes;
  std::vector<ReportValue> values;

  void add(ReportValue v) { values.push_back(std::move(v)); }
  const ReportValue* find(const std::string& name) const;
  bool all_converged() const;
};

// Eq.-(7) branch formula for single-piece arguments:
//   same branch  ->  pauli_jordan(G1, G2)
//   mixed        ->  +- roberts(G1, G2)  (+ for electric/magnetic order)
// Spacelike separation of the piece supports is checked; a violation is
// recorded as a note, not an error.
ChargeReport topo_commutator(const DecomposedOneForm& g1,
                             const DecomposedOneForm& g2,
                             const QuadratureSpec& spec,
                             const CircleLoop* loop1 = nullptr,
                             const CircleLoop* loop2 = nullptr);

// ---------------------------------------------------------------------------
// quasi-free generating functionals

class GeneratingFunctional {
 public:
  enum class Kind { Trivial, Free, Topological, Zeta, Product };

  static GeneratingFunctional trivial();
  static GeneratingFunctional free_state();        // omega_0
  static GeneratingFunctional topological();       // omega_T
  static GeneratingFunctional zeta_state(double zeta);  // omega_zeta
  // s-product: evaluators multiply, commutator forms add
  static GeneratingFunctional product(GeneratingFunctional a,
                                      GeneratingFunctional b);

  Kind kind() const { return kind_; }
  double zeta() const { return zeta_; }

  // quadratic form q(g) >= 0 with omega(V(a,g)) = exp(-a^2 q(g) / 2)
  IntegralResult qform(const FieldArg& g, const QuadratureSpec& spec) const;
  double value(double a, const FieldArg& g, const QuadratureSpec& spec) const;
  // sigma(g1,g2): the central commutator value
  IntegralResult commutator(const FieldArg& g1, const FieldArg& g2,
                            const QuadratureSpec& spec) const;

 private:
  Kind kind_ = Kind::Trivial;
  double zeta_ = 0.0;
  std::vector<GeneratingFunctional> children_;
};

double omega_T(double a, const DecomposedOneForm& g, const QuadratureSpec& spec);

IntegralResult sigma(const GeneratingFunctional& state, const FieldArg& g1,
                     const FieldArg& g2, const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// relation checks ((1)-(3) of the defining relations)

struct RelationCheck {
  std::string name;
  bool pass = true;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

struct RelationSuiteConfig {
  QuadratureSpec spec = QuadratureSpec::fast();
  double a_width = 0.1;
  double b_width = 0.04;
  double weyl_a = 1.0;
  std::uint64_t seed = 20260809;
};

RelationReport verify_relations(const GeneratingFunctional& state,
                                const RelationSuiteConfig& cfg);

}  // namespace loopfield
