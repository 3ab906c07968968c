#include "loopfield/loops.hpp"

#include <cmath>

#include "loopfield/errors.hpp"

namespace loopfield {

namespace {

double norm4(const Vec4& p) {
  return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
}

int loop_nodes_for(const Vec4& p, const CircleLoop& loop) {
  const double osc = 8.0 * norm4(p) * loop.radius * std::abs(loop.traversals);
  return std::max(64, static_cast<int>(std::ceil(osc)));
}

// ---- smear helpers --------------------------------------------------------

struct SmearOps {
  // Fourier transform s-hat(p) (kernel e^{i p.x})
  Complex momentum(const Smear& s, const Vec4& p) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s)) {
      Complex v(1.0, 0.0);
      for (int mu = 0; mu < 4; ++mu)
        v *= pr->f[mu].fourier(mu == 0 ? p[0] : -p[mu]);
      return v;
    }
    const auto& sk = std::get<SmearSikl>(s);
    const double q = std::hypot(p[sk.ci], p[sk.ck]);
    const auto tabs = RadialTables::make(sk.b);
    return sk.alpha.fourier(p[0]) * sk.beta.fourier(-p[sk.cl]) *
           (sk.b.amplitude() * tabs->hankel(RadialKind::b).H0(q));
  }

  double position(const Smear& s, const Vec4& x) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s)) {
      double v = 1.0;
      for (int mu = 0; mu < 4; ++mu) v *= pr->f[mu].value(x[mu]);
      return v;
    }
    const auto& sk = std::get<SmearSikl>(s);
    const double r2 = x[sk.ci] * x[sk.ci] + x[sk.ck] * x[sk.ck];
    return sk.alpha.value(x[0]) * sk.beta.value(x[sk.cl]) * sk.b.value(r2);
  }

  double position_derivative(const Smear& s, int nu, const Vec4& x) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s)) {
      double v = 1.0;
      for (int mu = 0; mu < 4; ++mu)
        v *= (mu == nu) ? pr->f[mu].derivative(x[mu]) : pr->f[mu].value(x[mu]);
      return v;
    }
    const auto& sk = std::get<SmearSikl>(s);
    const double r2 = x[sk.ci] * x[sk.ci] + x[sk.ck] * x[sk.ck];
    if (nu == 0)
      return sk.alpha.derivative(x[0]) * sk.beta.value(x[sk.cl]) * sk.b.value(r2);
    if (nu == sk.cl)
      return sk.alpha.value(x[0]) * sk.beta.derivative(x[sk.cl]) * sk.b.value(r2);
    if (nu == sk.ci || nu == sk.ck)
      return sk.alpha.value(x[0]) * sk.beta.value(x[sk.cl]) *
             sk.b.derivative(r2) * 2.0 * x[nu];
    return 0.0;
  }

  // spatial extents for support geometry: radius in the loop plane normal
  // directions and the time extent
  double spatial_radius(const Smear& s) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s)) {
      double r2 = 0.0;
      for (int j = 1; j < 4; ++j)
        r2 += pr->f[j].support_radius() * pr->f[j].support_radius();
      return std::sqrt(r2);
    }
    const auto& sk = std::get<SmearSikl>(s);
    const double tube = std::sqrt(std::abs(sk.b.center()) + sk.b.support_radius());
    return std::hypot(tube, sk.beta.support_radius());
  }

  double time_radius(const Smear& s) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s))
      return pr->f[0].support_radius();
    return std::get<SmearSikl>(s).alpha.support_radius();
  }

  bool compact(const Smear& s) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s)) {
      for (const auto& f : pr->f)
        if (!f.compact()) return false;
      return true;
    }
    const auto& sk = std::get<SmearSikl>(s);
    return sk.alpha.compact() && sk.beta.compact() && sk.b.compact();
  }

  bool position_evaluable(const Smear& s) const {
    if (const auto* pr = std::get_if<SmearProduct>(&s)) {
      for (const auto& f : pr->f)
        if (f.kind() == ProfileKind::DiracLimit) return false;
      return true;
    }
    const auto& sk = std::get<SmearSikl>(s);
    return sk.alpha.kind() != ProfileKind::DiracLimit &&
           sk.beta.kind() != ProfileKind::DiracLimit &&
           sk.b.kind() != ProfileKind::DiracLimit;
  }
};

SupportRegion loop_support(const Smear& s, const CircleLoop& loop) {
  SmearOps ops;
  TorusRegion t;
  t.ci = loop.ci;
  t.ck = loop.ck;
  t.center = loop.center;
  t.major_radius = loop.radius;
  t.tube_radius = ops.spatial_radius(s);
  t.time_half = ops.time_radius(s);
  SupportRegion r = SupportRegion::torus(t);
  if (!ops.compact(s)) r.mark_approximate();
  return r;
}

class LoopPiece : public PieceImpl {
 public:
  LoopPiece(Smear s, CircleLoop loop) : s_(std::move(s)), loop_(loop) {
    loop_.validate();
    SmearOps ops;
    pos_nodes_ = 512;
    const double tr = ops.time_radius(s_);
    if (tr > 0.0)
      pos_nodes_ = std::max(
          512, static_cast<int>(std::ceil(24.0 * loop_.radius *
                                          std::abs(loop_.traversals) / tr)));
  }

  CVec4 momentum(const Vec4& p) const override {
    SmearOps ops;
    const Complex shat = ops.momentum(s_, p);
    const int n = loop_nodes_for(p, loop_);
    CVec4 acc{};
    std::vector<CVec4> vals(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double t = static_cast<double>(j) / n;
      const Vec4 g = loop_.point(t);
      const Vec4 gd = loop_.tangent(t);
      const Complex ph = std::polar(1.0 / n, minkowski(p, g));
      for (int mu = 0; mu < 4; ++mu) vals[static_cast<std::size_t>(j)][mu] = ph * gd[mu];
    }
    for (int mu = 0; mu < 4; ++mu) {
      std::vector<Complex> col(vals.size());
      for (std::size_t j = 0; j < vals.size(); ++j) col[j] = vals[j][mu];
      acc[mu] = shat * pairwise_sum(col);
    }
    return acc;
  }

  Vec4 position(const Vec4& x) const override {
    SmearOps ops;
    Vec4 acc{};
    for (int j = 0; j < pos_nodes_; ++j) {
      const double t = static_cast<double>(j) / pos_nodes_;
      const double sv = ops.position(s_, x - loop_.point(t));
      const Vec4 gd = loop_.tangent(t);
      for (int mu = 0; mu < 4; ++mu) acc[mu] += sv * gd[mu] / pos_nodes_;
    }
    return acc;
  }

  double divergence(const Vec4& x) const override {
    SmearOps ops;
    double acc = 0.0;
    for (int j = 0; j < pos_nodes_; ++j) {
      const double t = static_cast<double>(j) / pos_nodes_;
      const Vec4 y = x - loop_.point(t);
      const Vec4 gd = loop_.tangent(t);
      for (int mu = 0; mu < 4; ++mu)
        acc += ops.position_derivative(s_, mu, y) * gd[mu] / pos_nodes_;
    }
    return acc;
  }

  SupportRegion support() const override { return loop_support(s_, loop_); }
  bool position_evaluable() const override {
    return SmearOps{}.position_evaluable(s_);
  }

 private:
  Smear s_;
  CircleLoop loop_;
  int pos_nodes_;
};

}  // namespace

Vec4 CircleLoop::point(double t) const {
  const double th = kTwoPi * traversals * t;
  Vec4 p = center;
  p[ci] += radius * std::cos(th);
  p[ck] += radius * std::sin(th);
  return p;
}

Vec4 CircleLoop::tangent(double t) const {
  const double th = kTwoPi * traversals * t;
  const double w = kTwoPi * traversals * radius;
  Vec4 p{};
  p[ci] = -w * std::sin(th);
  p[ck] = w * std::cos(th);
  return p;
}

void CircleLoop::validate() const {
  if (ci < 1 || ci > 3 || ck < 1 || ck > 3 || ci == ck)
    throw GeometryError("loop plane must be a pair of distinct spatial axes");
  if (!(radius > 0.0)) throw GeometryError("loop radius must be positive");
  if (traversals == 0)
    throw GeometryError("loop must traverse its circle at least once "
                        "(zero windings is not a closed parametrization)");
}

double smear_integral(const Smear& s) {
  if (const auto* pr = std::get_if<SmearProduct>(&s)) {
    double v = 1.0;
    for (const auto& f : pr->f) v *= f.integral();
    return v;
  }
  const auto& sk = std::get<SmearSikl>(s);
  const auto tabs = RadialTables::make(sk.b);
  return sk.alpha.integral() * sk.beta.integral() *
         (sk.b.amplitude() * kTwoPi * tabs->hankel(RadialKind::b).M1);
}

OneFormPiece loop_function(const Smear& s, const CircleLoop& loop) {
  loop.validate();
  auto piece = OneFormPiece(std::make_shared<LoopPiece>(s, loop));
  return piece.with_kappa(smear_integral(s));
}

// ---------------------------------------------------------------------------
// canonical family

namespace {

void validate_plane(int ci, int ck, int cl) {
  if (ci + ck + cl != 6 || ci < 1 || ck < 1 || cl < 1 || ci == ck ||
      ci == cl || ck == cl)
    throw GeometryError("canonical plane/axis must be a permutation of {1,2,3}");
}

SupportRegion canonical_piece_support(const CanonicalSpec& s,
                                      std::shared_ptr<const RadialTables> tabs) {
  TorusRegion t;
  t.ci = s.ci;
  t.ck = s.ck;
  t.center = s.shift;
  t.center[0] += s.alpha.center();
  t.center[s.cl] += s.beta.center();
  t.major_radius = 1.0;
  t.tube_radius = std::hypot(tabs->band_halfwidth(), s.beta.support_radius());
  t.time_half = s.alpha.support_radius();
  SupportRegion r = SupportRegion::torus(t);
  if (!s.alpha.compact() || !s.beta.compact() || !s.b.compact())
    r.mark_approximate();
  return r;
}

class CanonicalMagneticPiece : public PieceImpl {
 public:
  CanonicalMagneticPiece(CanonicalSpec spec,
                         std::shared_ptr<const RadialTables> tabs)
      : s_(std::move(spec)), tabs_(std::move(tabs)) {
    alpha_ = s_.alpha.shifted(s_.shift[0]);
    beta_ = s_.beta.shifted(s_.shift[s_.cl]);
    zi_ = s_.shift[s_.ci];
    zk_ = s_.shift[s_.ck];
    bamp_ = s_.b.amplitude();
  }

  CVec4 momentum(const Vec4& p) const override {
    const double q = std::hypot(p[s_.ci], p[s_.ck]);
    const Complex ahat = alpha_.fourier(p[0]) * beta_.fourier(-p[s_.cl]);
    const Complex phase = std::polar(1.0, -(p[s_.ci] * zi_ + p[s_.ck] * zk_));
    const double h1q = tabs_->hankel(RadialKind::c).H1_over_q(q);
    const Complex common = kTwoPi * bamp_ * ahat * phase * h1q;
    CVec4 g{};
    g[s_.ci] = Complex(0.0, 1.0) * p[s_.ck] * common;
    g[s_.ck] = Complex(0.0, -1.0) * p[s_.ci] * common;
    return g;
  }

  Vec4 position(const Vec4& x) const override {
    const double xi = x[s_.ci] - zi_, xk = x[s_.ck] - zk_;
    const double r2 = xi * xi + xk * xk;
    const double scal = kTwoPi * bamp_ * alpha_.value(x[0]) *
                        beta_.value(x[s_.cl]) * tabs_->c_at_r2(r2);
    Vec4 g{};
    g[s_.ci] = -xk * scal;
    g[s_.ck] = xi * scal;
    return g;
  }

  double divergence(const Vec4& x) const override {
    // d_i g^i + d_k g^k; the two terms cancel algebraically, evaluate both
    const double xi = x[s_.ci] - zi_, xk = x[s_.ck] - zk_;
    const double r2 = xi * xi + xk * xk;
    const double ab = alpha_.value(x[0]) * beta_.value(x[s_.cl]);
    const double cp = tabs_->c_deriv_u(r2);
    const double di = -xk * cp * 2.0 * xi;
    const double dk = xi * cp * 2.0 * xk;
    return kTwoPi * bamp_ * ab * (di + dk);
  }

  SupportRegion support() const override {
    return canonical_piece_support(s_, tabs_);
  }
  bool position_evaluable() const override {
    return alpha_.kind() != ProfileKind::DiracLimit &&
           beta_.kind() != ProfileKind::DiracLimit;
  }

 private:
  CanonicalSpec s_;
  std::shared_ptr<const RadialTables> tabs_;
  Profile1D alpha_ = Profile1D::bump(0, 1), beta_ = Profile1D::bump(0, 1);
  double zi_ = 0, zk_ = 0, bamp_ = 1;
};

class CanonicalElectricPiece : public PieceImpl {
 public:
  CanonicalElectricPiece(CanonicalSpec spec,
                         std::shared_ptr<const RadialTables> tabs)
      : s_(std::move(spec)), tabs_(std::move(tabs)) {
    alpha_ = s_.alpha.shifted(s_.shift[0]);
    beta_ = s_.beta.shifted(s_.shift[s_.cl]);
    zi_ = s_.shift[s_.ci];
    zk_ = s_.shift[s_.ck];
    bamp_ = s_.b.amplitude();
  }

  CVec4 momentum(const Vec4& p) const override {
    const double q = std::hypot(p[s_.ci], p[s_.ck]);
    const Complex phase = std::polar(1.0, -(p[s_.ci] * zi_ + p[s_.ck] * zk_));
    const double h0 = tabs_->hankel(RadialKind::c).H0(q);
    const Complex common = kTwoPi * bamp_ * phase * h0;
    CVec4 g{};
    g[0] = Complex(0.0, 1.0) * p[s_.cl] * alpha_.fourier(p[0]) *
           beta_.fourier(-p[s_.cl]) * common;
    g[s_.cl] = Complex(0.0, 1.0) * p[0] * alpha_.fourier(p[0]) *
               beta_.fourier(-p[s_.cl]) * common;
    return g;
  }

  Vec4 position(const Vec4& x) const override {
    const double xi = x[s_.ci] - zi_, xk = x[s_.ck] - zk_;
    const double c = bamp_ * tabs_->c_at_r2(xi * xi + xk * xk);
    Vec4 g{};
    g[0] = kTwoPi * alpha_.value(x[0]) * beta_.derivative(x[s_.cl]) * c;
    g[s_.cl] = -kTwoPi * alpha_.derivative(x[0]) * beta_.value(x[s_.cl]) * c;
    return g;
  }

  double divergence(const Vec4& x) const override {
    const double xi = x[s_.ci] - zi_, xk = x[s_.ck] - zk_;
    const double c = bamp_ * tabs_->c_at_r2(xi * xi + xk * xk);
    const double d0 = alpha_.derivative(x[0]) * beta_.derivative(x[s_.cl]) * c;
    const double dl = -alpha_.derivative(x[0]) * beta_.derivative(x[s_.cl]) * c;
    return kTwoPi * (d0 + dl);
  }

  SupportRegion support() const override {
    return canonical_piece_support(s_, tabs_);
  }
  bool position_evaluable() const override {
    return alpha_.kind() != ProfileKind::DiracLimit &&
           beta_.kind() != ProfileKind::DiracLimit;
  }

 private:
  CanonicalSpec s_;
  std::shared_ptr<const RadialTables> tabs_;
  Profile1D alpha_ = Profile1D::bump(0, 1), beta_ = Profile1D::bump(0, 1);
  double zi_ = 0, zk_ = 0, bamp_ = 1;
};

TwoForm canonical_coprimitive(const CanonicalSpec& s,
                              std::shared_ptr<const RadialTables> tabs,
                              bool magnetic) {
  std::array<std::vector<Term>, 6> comps;
  Term t;
  t.profs.push_back({0, s.alpha.shifted(s.shift[0]), 0});
  t.profs.push_back({s.cl, s.beta.shifted(s.shift[s.cl]), 0});
  RadialFactor rf;
  rf.ci = s.ci;
  rf.ck = s.ck;
  rf.tabs = tabs;
  rf.amp = s.b.amplitude();
  rf.zi = s.shift[s.ci];
  rf.zk = s.shift[s.ck];
  double sign;
  int pair;
  if (magnetic) {
    rf.kind = RadialKind::C;
    t.coeff = -kPi;  // 2 pi * (-1/2) at the stored (i,k) slot
    pair = pair_index(s.ci, s.ck, sign);
  } else {
    rf.kind = RadialKind::c;
    t.coeff = kTwoPi;
    pair = pair_index(0, s.cl, sign);
  }
  t.coeff *= sign;
  t.radial = rf;
  comps[pair].push_back(std::move(t));

  SupportRegion supp;
  if (magnetic) {
    // the C plateau fills the spanning disk: a box cover
    BoxRegion b;
    const double rr = 1.0 + tabs->band_halfwidth();
    for (int j = 0; j < 4; ++j) {
      b.lo[j] = s.shift[j];
      b.hi[j] = s.shift[j];
    }
    b.lo[0] += s.alpha.center() - s.alpha.support_radius();
    b.hi[0] += s.alpha.center() + s.alpha.support_radius();
    b.lo[s.cl] += s.beta.center() - s.beta.support_radius();
    b.hi[s.cl] += s.beta.center() + s.beta.support_radius();
    b.lo[s.ci] -= rr;
    b.hi[s.ci] += rr;
    b.lo[s.ck] -= rr;
    b.hi[s.ck] += rr;
    supp = SupportRegion::box(b);
  } else {
    supp = canonical_piece_support(s, tabs);
  }
  if (!s.alpha.compact() || !s.beta.compact()) supp.mark_approximate();
  return TwoForm(std::make_shared<ProductTwoForm>(std::move(comps), supp));
}

}  // namespace

OneFormPiece canonical_g(const CanonicalSpec& spec) {
  validate_plane(spec.ci, spec.ck, spec.cl);
  auto tabs = RadialTables::make(spec.b);
  auto piece = OneFormPiece(
      std::make_shared<CanonicalMagneticPiece>(spec, tabs));
  SmearSikl induced{spec.ci, spec.ck, spec.cl, spec.alpha, spec.beta, spec.b};
  return piece.with_coprimitive(canonical_coprimitive(spec, tabs, true))
      .with_kappa(smear_integral(Smear(induced)));
}

OneFormPiece canonical_g0(const CanonicalSpec& spec) {
  validate_plane(spec.ci, spec.ck, spec.cl);
  auto tabs = RadialTables::make(spec.b);
  auto piece = OneFormPiece(
      std::make_shared<CanonicalElectricPiece>(spec, tabs));
  return piece.with_coprimitive(canonical_coprimitive(spec, tabs, false))
      .with_kappa(0.0);  // co-exact within its torus: trivial class
}

// ---------------------------------------------------------------------------
// spanning-disk co-primitive

namespace {

class DiskTwoForm : public TwoFormImpl {
 public:
  DiskTwoForm(Smear s, CircleLoop loop) : s_(std::move(s)), loop_(loop) {
    loop_.validate();
    double sign;
    pair_ = pair_index(loop_.ci, loop_.ck, sign);
    orient_ = sign;  // stored component is G^{min(ci,ck), max(ci,ck)}
  }

  Complex momentum(int pair, const Vec4& p) const override {
    if (pair != pair_) return {};
    SmearOps ops;
    const Complex shat = ops.momentum(s_, p);
    const Complex phase = std::polar(1.0, minkowski(p, loop_.center));
    const double R = loop_.radius;
    const double qR = std::hypot(p[loop_.ci], p[loop_.ck]) * R;
    const int nt = std::max(64, static_cast<int>(std::ceil(8.0 * norm4(p) * R)));
    const int panels = std::max(1, static_cast<int>(std::ceil(qR / 8.0)));
    // \int_0^1 du u \oint dt e^{-i u R (p_i cos + p_k sin)}
    std::vector<Complex> uvals;
    const GaussRule& gr = gauss_legendre(12);
    const double h = 1.0 / panels;
    for (int pl = 0; pl < panels; ++pl) {
      const double mid = (pl + 0.5) * h;
      for (std::size_t a = 0; a < gr.nodes.size(); ++a) {
        const double u = mid + 0.5 * h * gr.nodes[a];
        std::vector<Complex> tv(static_cast<std::size_t>(nt));
        for (int j = 0; j < nt; ++j) {
          const double th = kTwoPi * j / nt;
          const double arg =
              -u * R * (p[loop_.ci] * std::cos(th) + p[loop_.ck] * std::sin(th));
          tv[static_cast<std::size_t>(j)] = std::polar(1.0 / nt, arg);
        }
        uvals.push_back(gr.weights[a] * 0.5 * h * u * pairwise_sum(tv));
      }
    }
    const Complex inner = pairwise_sum(uvals);
    return orient_ * kTwoPi * loop_.traversals * R * R * shat * phase * inner;
  }

  double position(int pair, const Vec4& x) const override {
    if (pair != pair_) return 0.0;
    return orient_ * disk_integral([&](const Vec4& y) {
      return SmearOps{}.position(s_, y);
    }, x);
  }

  double position_derivative(int pair, int nu, const Vec4& x) const override {
    if (pair != pair_) return 0.0;
    return orient_ * disk_integral([&](const Vec4& y) {
      return SmearOps{}.position_derivative(s_, nu, y);
    }, x);
  }

  SupportRegion support() const override {
    SmearOps ops;
    BoxRegion b;
    const double rr = loop_.radius + ops.spatial_radius(s_);
    for (int j = 0; j < 4; ++j) {
      b.lo[j] = loop_.center[j];
      b.hi[j] = loop_.center[j];
    }
    b.lo[0] -= ops.time_radius(s_);
    b.hi[0] += ops.time_radius(s_);
    for (int j : {loop_.ci, loop_.ck}) {
      b.lo[j] -= rr;
      b.hi[j] += rr;
    }
    const int cl = 6 - loop_.ci - loop_.ck;
    b.lo[cl] -= ops.spatial_radius(s_);
    b.hi[cl] += ops.spatial_radius(s_);
    SupportRegion r = SupportRegion::box(b);
    if (!ops.compact(s_)) r.mark_approximate();
    return r;
  }

  bool position_evaluable() const override {
    return SmearOps{}.position_evaluable(s_);
  }

 private:
  template <typename F>
  double disk_integral(F&& f, const Vec4& x) const {
    // 2 pi n R^2 \int_0^1 du u \oint dt f(x - S(t,u))
    const double R = loop_.radius;
    const int nu = 64, nt = 512;
    const GaussRule& gr = gauss_legendre(nu);
    double acc = 0.0;
    for (std::size_t a = 0; a < gr.nodes.size(); ++a) {
      const double u = 0.5 + 0.5 * gr.nodes[a];
      double tsum = 0.0;
      for (int j = 0; j < nt; ++j) {
        const double th = kTwoPi * j / nt;
        Vec4 y = x;
        y[0] -= loop_.center[0];
        y[1] -= loop_.center[1];
        y[2] -= loop_.center[2];
        y[3] -= loop_.center[3];
        y[loop_.ci] -= u * R * std::cos(th);
        y[loop_.ck] -= u * R * std::sin(th);
        tsum += f(y);
      }
      acc += gr.weights[a] * 0.5 * u * tsum / nt;
    }
    return kTwoPi * loop_.traversals * R * R * acc;
  }

  Smear s_;
  CircleLoop loop_;
  int pair_;
  double orient_;
};

}  // namespace

TwoForm disk_coprimitive(const Smear& s, const CircleLoop& loop) {
  return TwoForm(std::make_shared<DiskTwoForm>(s, loop));
}

// ---------------------------------------------------------------------------
// linking number

LinkingResult gauss_linking(const CircleLoop& a, const CircleLoop& b) {
  a.validate();
  b.validate();
  if (a.center[0] != b.center[0])
    throw GeometryError("gauss_linking requires loops at equal time");
  const int n = 512;
  // disjointness check on the sampled images
  double dmin = 1e300;
  for (int i = 0; i < n; ++i) {
    const Vec4 pa = a.point(static_cast<double>(i) / n);
    for (int j = 0; j < n; ++j) {
      const Vec4 pb = b.point(static_cast<double>(j) / n);
      const double d = std::sqrt((pa[1] - pb[1]) * (pa[1] - pb[1]) +
                                 (pa[2] - pb[2]) * (pa[2] - pb[2]) +
                                 (pa[3] - pb[3]) * (pa[3] - pb[3]));
      dmin = std::min(dmin, d);
    }
  }
  const double margin = kPi * (a.radius * std::abs(a.traversals) +
                               b.radius * std::abs(b.traversals)) / n;
  if (dmin <= margin * 2.0 + 1e-9)
    throw GeometryError("gauss_linking: loop images intersect or nearly so");

  std::vector<double> contrib;
  contrib.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const Vec4 pa = a.point(static_cast<double>(i) / n);
    const Vec4 ta = a.tangent(static_cast<double>(i) / n);
    for (int j = 0; j < n; ++j) {
      const Vec4 pb = b.point(static_cast<double>(j) / n);
      const Vec4 tb = b.tangent(static_cast<double>(j) / n);
      const double dx = pa[1] - pb[1], dy = pa[2] - pb[2], dz = pa[3] - pb[3];
      const double cr1 = ta[2] * tb[3] - ta[3] * tb[2];
      const double cr2 = ta[3] * tb[1] - ta[1] * tb[3];
      const double cr3 = ta[1] * tb[2] - ta[2] * tb[1];
      const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
      contrib.push_back((dx * cr1 + dy * cr2 + dz * cr3) / (r * r * r));
    }
  }
  LinkingResult res;
  res.raw = pairwise_sum(contrib) / (4.0 * kPi * n * n);
  res.value = static_cast<int>(std::lround(res.raw));
  if (std::abs(res.raw - res.value) >= 0.01)
    throw GeometryError("gauss_linking did not converge to an integer");
  return res;
}

}  // namespace loopfield
