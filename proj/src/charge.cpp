#include "loopfield/charge.hpp"

#include <cmath>
#include <random>

#include "loopfield/errors.hpp"
#include "loopfield/multiplet.hpp"

namespace loopfield {

// ---------------------------------------------------------------------------
// DecomposedOneForm

DecomposedOneForm DecomposedOneForm::build(std::vector<OneFormPiece> pieces,
                                           double indicator_rel_tol) {
  DecomposedOneForm d;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.empty()) throw Error("decomposition piece is empty");
    if (!p.connected())
      throw Error("decomposition pieces must have connected supports");
    if (!p.coprimitive())
      throw Error("decomposition piece " + std::to_string(i) +
                  " carries no co-primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (!disjoint(p.support(), pieces[j].support()))
        throw GeometryError("decomposition pieces " + std::to_string(j) +
                            " and " + std::to_string(i) +
                            " do not have disjoint supports");
    TaggedPiece t;
    t.piece = p;
    t.coprimitive = *p.coprimitive();
    const Mat4 m = gbar(t.coprimitive);
    double scale = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) scale = std::max(scale, m[a][b] * m[a][b]);
    t.indicator = type_indicator(m);
    if (std::abs(t.indicator) <= indicator_rel_tol * std::max(scale, 1e-300))
      throw AmbiguousTypeError(
          "piece " + std::to_string(i) +
          " has a near-null co-primitive (|Ebar^2 - Bbar^2| below tolerance); "
          "no theta branch can be assigned");
    t.branch = t.indicator > 0 ? BranchTag::Electric : BranchTag::Magnetic;
    d.entries_.push_back(std::move(t));
  }
  if (d.entries_.empty()) throw Error("empty decomposition");
  return d;
}

DecomposedOneForm DecomposedOneForm::single(const OneFormPiece& piece,
                                            double tol) {
  return build({piece}, tol);
}

OneForm DecomposedOneForm::oneform() const {
  OneForm f;
  for (const auto& e : entries_) f.pieces.push_back(e.piece);
  return f;
}

TwoForm DecomposedOneForm::coprimitive_sum() const {
  TwoForm acc = entries_[0].coprimitive;
  for (std::size_t i = 1; i < entries_.size(); ++i)
    acc = acc + entries_[i].coprimitive;
  return acc;
}

SupportRegion DecomposedOneForm::support() const {
  SupportRegion s;
  for (const auto& e : entries_) s.add(e.piece.support());
  return s;
}

DecomposedOneForm DecomposedOneForm::scaled(double s) const {
  DecomposedOneForm out;
  if (s == 0.0) throw Error("scaling a decomposition by zero drops the form");
  for (const auto& e : entries_) {
    TaggedPiece t;
    t.piece = e.piece.scaled(s);
    t.coprimitive = s * e.coprimitive;
    t.indicator = s * s * e.indicator;
    t.branch = e.branch;  // indicator scales by s^2 > 0
    out.entries_.push_back(std::move(t));
  }
  return out;
}

TwoForm build_GT(const DecomposedOneForm& g) {
  TwoForm acc;
  for (const auto& e : g.entries()) {
    const TwoForm part =
        e.branch == BranchTag::Electric ? e.coprimitive : hodge_star(e.coprimitive);
    acc = acc.empty() ? part : acc + part;
  }
  return acc;
}

// ---------------------------------------------------------------------------

double eta_threshold(const TwoForm& Gm, const TwoForm& Ge) {
  const double im = type_indicator(Gm);
  const double ie = type_indicator(Ge);
  if (!(im < 0.0) || !(ie > 0.0))
    throw AmbiguousTypeError(
        "eta_threshold requires indicator(Gm) < 0 < indicator(Ge)");
  return std::sqrt(-im / ie);
}

double reduced_roberts_oracle(const Profile1D& b, double e1) {
  return reduced_roberts_oracle(b, b, e1);
}

double reduced_roberts_oracle(const Profile1D& b_c, const Profile1D& b_C,
                              double e1) {
  if (!(b_c.width() < std::min(1.0, e1) / 4.0) ||
      !(b_C.width() < std::min(1.0, e1) / 4.0))
    throw ConventionError(
        "reduced_roberts_oracle requires width(b) < min(1, e1)/4");
  const auto tc = RadialTables::make(b_c);
  const auto tC = RadialTables::make(b_C);
  const double ac = b_c.amplitude(), aC = b_C.amplitude();
  auto f = [&](double z) {
    const double c = ac * tc->c_at_r2(z * z);
    const double C = aC * tC->C_at_r2((z - e1) * (z - e1));
    return z * c * C;
  };
  const double lo = tc->band_lo(), hi = tc->band_hi();
  return integrate_panels(f, -hi, -lo, 12, 12) +
         integrate_panels(f, lo, hi, 12, 12);
}

RichardsonResult richardson_extrapolate(double v_w, double v_w2, double v_w4,
                                        double noise_floor) {
  RichardsonResult r;
  const double d1 = v_w2 - v_w;
  const double d2 = v_w4 - v_w2;
  const double scale = std::max({std::abs(v_w), std::abs(v_w2), std::abs(v_w4)});
  const double floor = std::max(noise_floor, 1e-9 * scale);
  if (std::abs(d2) <= floor || std::abs(d1) <= std::abs(d2)) {
    // ladder is converged below noise (or not yet in the asymptotic regime);
    // the finest value is the best estimate
    r.value = v_w4;
    r.order_estimated = false;
    return r;
  }
  double p = std::log2(std::abs(d1 / d2));
  p = std::clamp(p, 0.5, 8.0);
  r.order = p;
  r.order_estimated = true;
  r.value = v_w4 + d2 / (std::pow(2.0, p) - 1.0);
  return r;
}

// ---------------------------------------------------------------------------
// reports

ReportValue ReportValue::plain(std::string n, double v) {
  ReportValue r;
  r.name = std::move(n);
  r.value = v;
  return r;
}

ReportValue ReportValue::integral(std::string n, const IntegralResult& ir) {
  ReportValue r;
  r.name = std::move(n);
  r.value = ir.value.real();
  r.error = ir.error;
  r.nodes = ir.nodes;
  r.converged = ir.converged;
  r.quadrature = true;
  return r;
}

const ReportValue* ChargeReport::find(const std::string& name) const {
  for (const auto& v : values)
    if (v.name == name) return &v;
  return nullptr;
}

bool ChargeReport::all_converged() const {
  for (const auto& v : values)
    if (v.quadrature && !v.converged) return false;
  return true;
}

ChargeReport topo_commutator(const DecomposedOneForm& g1,
                             const DecomposedOneForm& g2,
                             const QuadratureSpec& spec,
                             const CircleLoop* loop1, const CircleLoop* loop2) {
  if (!g1.single_piece() || !g2.single_piece())
    throw Error("topo_commutator takes single-piece decompositions");
  const TaggedPiece& e1 = g1.entries()[0];
  const TaggedPiece& e2 = g2.entries()[0];

  ChargeReport rep;
  rep.title = "topo_commutator";
  rep.add(ReportValue::plain("indicator_1", e1.indicator));
  rep.add(ReportValue::plain("indicator_2", e2.indicator));
  rep.notes.push_back(std::string("branch_1=") + branch_name(e1.branch));
  rep.notes.push_back(std::string("branch_2=") + branch_name(e2.branch));
  if (auto k = e1.piece.kappa()) rep.add(ReportValue::plain("kappa_1", *k));
  if (auto k = e2.piece.kappa()) rep.add(ReportValue::plain("kappa_2", *k));

  if (!spacelike_separated(e1.piece.support(), e2.piece.support()))
    rep.notes.push_back(
        "warning: piece supports are not verifiably spacelike separated");

  IntegralResult val;
  if (e1.branch == e2.branch) {
    val = pauli_jordan(e1.coprimitive, e2.coprimitive, spec);
    rep.notes.push_back("branch product: diagonal (Delta term)");
  } else {
    const double sign = e1.branch == BranchTag::Electric ? 1.0 : -1.0;
    val = roberts(e1.coprimitive, e2.coprimitive, spec);
    val.value *= sign;
    rep.notes.push_back("branch product: mixed (Roberts term)");
  }
  rep.add(ReportValue::integral("commutator", val));

  if (loop1 && loop2) {
    try {
      const LinkingResult lk = gauss_linking(*loop1, *loop2);
      rep.add(ReportValue::plain("linking", lk.value));
      rep.add(ReportValue::plain("linking_raw", lk.raw));
    } catch (const GeometryError& err) {
      rep.notes.push_back(std::string("linking unavailable: ") + err.what());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// generating functionals

GeneratingFunctional GeneratingFunctional::trivial() {
  return GeneratingFunctional{};
}

GeneratingFunctional GeneratingFunctional::free_state() {
  GeneratingFunctional s;
  s.kind_ = Kind::Free;
  return s;
}

GeneratingFunctional GeneratingFunctional::topological() {
  GeneratingFunctional s;
  s.kind_ = Kind::Topological;
  return s;
}

GeneratingFunctional GeneratingFunctional::zeta_state(double zeta) {
  GeneratingFunctional s;
  s.kind_ = Kind::Zeta;
  s.zeta_ = zeta;
  return s;
}

GeneratingFunctional GeneratingFunctional::product(GeneratingFunctional a,
                                                   GeneratingFunctional b) {
  GeneratingFunctional s;
  s.kind_ = Kind::Product;
  s.children_.push_back(std::move(a));
  s.children_.push_back(std::move(b));
  return s;
}

namespace {

const DecomposedOneForm& as_single(const FieldArg& g, const char* who) {
  const auto* d = std::get_if<DecomposedOneForm>(&g);
  if (!d)
    throw Error(std::string(who) +
                " expects a single-field test form (got a doublet)");
  return *d;
}

const DoubletForm& as_doublet(const FieldArg& g, const char* who) {
  const auto* d = std::get_if<DoubletForm>(&g);
  if (!d)
    throw Error(std::string(who) + " expects a doublet test form");
  return *d;
}

}  // namespace

IntegralResult GeneratingFunctional::qform(const FieldArg& g,
                                           const QuadratureSpec& spec) const {
  switch (kind_) {
    case Kind::Trivial:
      return IntegralResult{};
    case Kind::Free: {
      const TwoForm G = as_single(g, "omega_0").coprimitive_sum();
      return inner0(G, G, spec);
    }
    case Kind::Topological: {
      const TwoForm GT = build_GT(as_single(g, "omega_T"));
      return inner0(GT, GT, spec);
    }
    case Kind::Zeta: {
      const DoubletForm& d = as_doublet(g, "omega_zeta");
      return zeta_inner(d, d, zeta_, spec);
    }
    case Kind::Product: {
      IntegralResult acc{};
      for (const auto& c : children_) {
        const IntegralResult r = c.qform(g, spec);
        acc.value += r.value;
        acc.error += r.error;
        acc.nodes += r.nodes;
        acc.converged = acc.converged && r.converged;
      }
      return acc;
    }
  }
  return {};
}

double GeneratingFunctional::value(double a, const FieldArg& g,
                                   const QuadratureSpec& spec) const {
  if (a == 0.0) return 1.0;  // relation (1) normalization, exact
  const IntegralResult q = qform(g, spec);
  return std::exp(-0.5 * a * a * q.value.real());
}

IntegralResult GeneratingFunctional::commutator(const FieldArg& g1,
                                                const FieldArg& g2,
                                                const QuadratureSpec& spec) const {
  switch (kind_) {
    case Kind::Trivial: {
      return IntegralResult{};
    }
    case Kind::Free: {
      const TwoForm G1 = as_single(g1, "omega_0").coprimitive_sum();
      const TwoForm G2 = as_single(g2, "omega_0").coprimitive_sum();
      return pauli_jordan(G1, G2, spec);
    }
    case Kind::Topological: {
      const TwoForm G1 = build_GT(as_single(g1, "omega_T"));
      const TwoForm G2 = build_GT(as_single(g2, "omega_T"));
      return pauli_jordan(G1, G2, spec);
    }
    case Kind::Zeta: {
      return zeta_commutator(as_doublet(g1, "omega_zeta"),
                             as_doublet(g2, "omega_zeta"), zeta_, spec);
    }
    case Kind::Product: {
      IntegralResult acc{};
      for (const auto& c : children_) {
        const IntegralResult r = c.commutator(g1, g2, spec);
        acc.value += r.value;
        acc.error += r.error;
        acc.nodes += r.nodes;
        acc.converged = acc.converged && r.converged;
      }
      return acc;
    }
  }
  return {};
}

double omega_T(double a, const DecomposedOneForm& g, const QuadratureSpec& spec) {
  return GeneratingFunctional::topological().value(a, FieldArg(g), spec);
}

IntegralResult sigma(const GeneratingFunctional& state, const FieldArg& g1,
                     const FieldArg& g2, const QuadratureSpec& spec) {
  return state.commutator(g1, g2, spec);
}

// ---------------------------------------------------------------------------
// relation checks

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct SuitePieces {
  DecomposedOneForm near_m, far_m;   // magnetic pieces, wedge-separated
  DecomposedOneForm hopf_mixed, hopf_far;  // the linked pair (mixed vs magnetic)
};

SuitePieces make_suite_pieces(const RelationSuiteConfig& cfg) {
  const Profile1D alpha = Profile1D::bump(0.0, cfg.a_width).normalized();
  const Profile1D beta = Profile1D::bump(0.0, cfg.a_width).normalized();
  const Profile1D b = Profile1D::bump(0.0, cfg.b_width);

  CanonicalSpec near_spec{1, 2, 3, alpha, beta, b, {0, 0, 0, 0}};
  CanonicalSpec far_spec{1, 2, 3, alpha, beta, b, {0, 8.0, 0, 0}};
  SuitePieces out{
      DecomposedOneForm::single(canonical_g(near_spec)),
      DecomposedOneForm::single(canonical_g(far_spec)),
      DecomposedOneForm(),
      DecomposedOneForm(),
  };

  CanonicalSpec hopf1{1, 2, 3, alpha, beta, b, {0, 0, 0, 0}};
  CanonicalSpec hopf2{1, 3, 2, alpha, beta, b, {0, 1.0, 0, 0}};
  const OneFormPiece gm = canonical_g(hopf1);
  const OneFormPiece ge = canonical_g0(hopf1);
  const double eta =
      1.25 * eta_threshold(*gm.coprimitive(), *ge.coprimitive());
  out.hopf_mixed = DecomposedOneForm::single(piece_sum(gm, ge.scaled(eta)));
  out.hopf_far = DecomposedOneForm::single(canonical_g(hopf2));
  return out;
}

}  // namespace

RelationReport verify_relations(const GeneratingFunctional& state,
                                const RelationSuiteConfig& cfg) {
  RelationReport rep;
  const SuitePieces pieces = make_suite_pieces(cfg);
  const bool doublet_state = state.kind() == GeneratingFunctional::Kind::Zeta;

  auto wrap = [&](const DecomposedOneForm& u,
                  const DecomposedOneForm* d = nullptr) -> FieldArg {
    if (!doublet_state) return FieldArg(u);
    DoubletForm g;
    g.u = u;
    if (d) g.d = *d;
    return FieldArg(g);
  };

  // relation (1): normalization and the quadratic (one-parameter group)
  // structure of the evaluator
  {
    const FieldArg g = wrap(pieces.near_m);
    RelationCheck c;
    c.name = "relation1_normalization";
    c.value = state.value(0.0, g, cfg.spec);
    c.tolerance = 0.0;
    c.pass = c.value == 1.0;
    rep.checks.push_back(c);

    const double v1 = state.value(0.7, g, cfg.spec);
    const double v2 = state.value(1.4, g, cfg.spec);
    RelationCheck c2;
    c2.name = "relation1_quadratic_form";
    // log omega(2a) = 4 log omega(a) for quasi-free states
    c2.value = std::abs(std::log(v2) - 4.0 * std::log(v1));
    c2.tolerance = 1e-10 * std::max(1.0, std::abs(std::log(v2)));
    c2.pass = c2.value <= c2.tolerance && v1 > 0.0 && v1 <= 1.0;
    rep.checks.push_back(c2);

    RelationCheck c3;
    c3.name = "relation1_monotone_in_a";
    c3.pass = v2 <= v1 && v1 <= 1.0;
    c3.value = v1;
    rep.checks.push_back(c3);
  }

  // relation (2): commutator vanishes for wedge-separated double cones
  {
    RelationCheck c;
    c.name = "relation2_wedge_separated_sigma";
    const bool wedge =
        wedge_separated(pieces.near_m.support(), pieces.far_m.support());
    const IntegralResult r = state.commutator(
        wrap(pieces.near_m), wrap(pieces.far_m), cfg.spec);
    const IntegralResult qn = state.qform(wrap(pieces.near_m), cfg.spec);
    const IntegralResult qf = state.qform(wrap(pieces.far_m), cfg.spec);
    const double scale =
        std::sqrt(std::max(qn.value.real(), 0.0) * std::max(qf.value.real(), 0.0));
    c.value = std::abs(r.value.real());
    c.tolerance = std::max(8.0 * r.error, 1e-6 * std::max(scale, 1e-300));
    c.pass = wedge && c.value <= c.tolerance;
    c.detail = wedge ? "wedge separation verified geometrically"
                     : "wedge separation could not be verified";
    rep.checks.push_back(c);
  }

  // the cross component for doublet states: u-piece against a far d-piece
  if (doublet_state) {
    DoubletForm g1;
    g1.u = pieces.near_m;
    DoubletForm g2;
    g2.d = pieces.far_m;
    const IntegralResult r =
        state.commutator(FieldArg(g1), FieldArg(g2), cfg.spec);
    const IntegralResult qn = state.qform(FieldArg(g1), cfg.spec);
    const IntegralResult qf = state.qform(FieldArg(g2), cfg.spec);
    const double scale =
        std::sqrt(std::max(qn.value.real(), 0.0) * std::max(qf.value.real(), 0.0));
    RelationCheck c;
    c.name = "relation2_wedge_separated_cross";
    c.value = std::abs(r.value.real());
    c.tolerance = std::max(8.0 * r.error, 1e-6 * std::max(scale, 1e-300));
    c.pass = c.value <= c.tolerance;
    rep.checks.push_back(c);
  }

  // relation (3): centrality is structural for quasi-free states
  {
    RelationCheck c;
    c.name = "relation3_centrality";
    c.pass = true;
    c.detail = "satisfied by construction: quasi-free commutator is a number";
    rep.checks.push_back(c);
  }

  // the linked configuration, recorded in the same report
  {
    const FieldArg a1 = doublet_state
                            ? [&] {
                                DoubletForm g;
                                g.u = pieces.hopf_mixed;
                                return FieldArg(g);
                              }()
                            : FieldArg(pieces.hopf_mixed);
    const FieldArg a2 = doublet_state
                            ? [&] {
                                DoubletForm g;
                                g.d = pieces.hopf_far;
                                return FieldArg(g);
                              }()
                            : FieldArg(pieces.hopf_far);
    const IntegralResult r = state.commutator(a1, a2, cfg.spec);
    RelationCheck c;
    c.name = "linked_pair_commutator";
    c.value = r.value.real();
    c.tolerance = 10.0 * r.error;
    const bool nonzero = std::abs(c.value) > c.tolerance;
    switch (state.kind()) {
      case GeneratingFunctional::Kind::Free:
      case GeneratingFunctional::Kind::Trivial:
        // linear field: the no-go statement demands zero
        c.pass = std::abs(c.value) <= std::max(8.0 * r.error, 1e-9);
        c.detail = "linear field: linked-pair commutator must vanish";
        break;
      default:
        c.pass = nonzero;
        c.detail = "topological charge: linked-pair commutator is nonzero";
        break;
    }
    rep.checks.push_back(c);
  }

  // positivity sampling for zeta states; flags the |zeta| > 1 regime
  if (doublet_state) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> amp(0.3, 1.5);
    double min_q = 1e300;
    bool converged = true;
    for (int i = 0; i < 4; ++i) {
      DoubletForm g;
      g.u = pieces.near_m.scaled(amp(rng));
      g.d = pieces.hopf_far.scaled(amp(rng) * (i % 2 ? -1.0 : 1.0));
      const IntegralResult q = state.qform(FieldArg(g), cfg.spec);
      min_q = std::min(min_q, q.value.real() + 3.0 * q.error);
      converged = converged && q.converged;
    }
    RelationCheck c;
    c.name = "zeta_positivity_sample";
    c.value = min_q;
    c.tolerance = 0.0;
    c.pass = min_q >= 0.0 && std::abs(state.zeta()) <= 1.0;
    c.detail = std::abs(state.zeta()) <= 1.0
                   ? "smallest sampled <g,g>_zeta (plus 3 sigma)"
                   : "|zeta| > 1: outside the positive-definite regime";
    rep.checks.push_back(c);
  }

  return rep;
}

}  // namespace loopfield
