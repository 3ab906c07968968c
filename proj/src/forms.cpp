#include "loopfield/forms.hpp"

#include <cmath>

#include "loopfield/errors.hpp"

namespace loopfield {

// ---------------------------------------------------------------------------
// Term

Complex Term::momentum(const Vec4& p) const {
  Complex v(coeff, 0.0);
  for (const auto& f : profs) v *= f.momentum(p);
  if (radial) v *= radial->momentum(p);
  return v;
}

double Term::position(const Vec4& x) const {
  double v = coeff;
  for (const auto& f : profs) v *= f.position(x);
  if (radial) v *= radial->position(x);
  return v;
}

double Term::position_derivative(int nu, const Vec4& x) const {
  // Leibniz over the factors, evaluated numerically at the point
  double sum = 0.0;
  for (std::size_t d = 0; d < profs.size(); ++d) {
    if (profs[d].coord != nu) continue;
    double v = coeff;
    for (std::size_t j = 0; j < profs.size(); ++j) {
      if (j == d) {
        ProfileFactor df = profs[j];
        df.deriv += 1;
        v *= df.position(x);
      } else {
        v *= profs[j].position(x);
      }
    }
    if (radial) v *= radial->position(x);
    sum += v;
  }
  if (radial && (nu == radial->ci || nu == radial->ck)) {
    double v = coeff;
    for (const auto& f : profs) v *= f.position(x);
    sum += v * radial->position_derivative(nu, x);
  }
  return sum;
}

bool Term::position_evaluable() const {
  for (const auto& f : profs)
    if (f.prof.kind() == ProfileKind::DiracLimit) return false;
  return true;
}

// ---------------------------------------------------------------------------
// TwoForm

Complex TwoForm::momentum(int mu, int nu, const Vec4& p) const {
  if (mu == nu) return {};
  double sign;
  const int pair = pair_index(mu, nu, sign);
  return sign * impl_->momentum(pair, p);
}

double TwoForm::position(int mu, int nu, const Vec4& x) const {
  if (mu == nu) return 0.0;
  double sign;
  const int pair = pair_index(mu, nu, sign);
  return sign * impl_->position(pair, x);
}

CVec4 TwoForm::contraction(const Vec4& p) const {
  const Vec4 pl = lower(p);
  CVec4 u{};
  for (int pair = 0; pair < 6; ++pair) {
    const int a = kPairFirst[pair], b = kPairSecond[pair];
    const Complex v = impl_->momentum(pair, p);
    u[a] += pl[b] * v;   // u^a += p_b G^{ab}
    u[b] -= pl[a] * v;   // u^b += p_a G^{ba} = -p_a G^{ab}
  }
  return u;
}

Complex ProductTwoForm::momentum(int pair, const Vec4& p) const {
  Complex v{};
  for (const auto& t : comps_[pair]) v += t.momentum(p);
  return v;
}

double ProductTwoForm::position(int pair, const Vec4& x) const {
  double v = 0.0;
  for (const auto& t : comps_[pair]) v += t.position(x);
  return v;
}

double ProductTwoForm::position_derivative(int pair, int nu, const Vec4& x) const {
  double v = 0.0;
  for (const auto& t : comps_[pair]) v += t.position_derivative(nu, x);
  return v;
}

bool ProductTwoForm::position_evaluable() const {
  for (const auto& comp : comps_)
    for (const auto& t : comp)
      if (!t.position_evaluable()) return false;
  return true;
}

namespace {

class StarTwoForm : public TwoFormImpl {
 public:
  explicit StarTwoForm(TwoForm inner) : inner_(std::move(inner)) {}
  Complex momentum(int pair, const Vec4& p) const override {
    return kStarSign[pair] * inner_.momentum_pair(kStarMap[pair], p);
  }
  double position(int pair, const Vec4& x) const override {
    return kStarSign[pair] * inner_.impl().position(kStarMap[pair], x);
  }
  double position_derivative(int pair, int nu, const Vec4& x) const override {
    return kStarSign[pair] * inner_.impl().position_derivative(kStarMap[pair], nu, x);
  }
  SupportRegion support() const override { return inner_.support(); }
  bool position_evaluable() const override { return inner_.position_evaluable(); }

 private:
  TwoForm inner_;
};

class ScaledTwoForm : public TwoFormImpl {
 public:
  ScaledTwoForm(double s, TwoForm inner) : s_(s), inner_(std::move(inner)) {}
  Complex momentum(int pair, const Vec4& p) const override {
    return s_ * inner_.momentum_pair(pair, p);
  }
  double position(int pair, const Vec4& x) const override {
    return s_ * inner_.impl().position(pair, x);
  }
  double position_derivative(int pair, int nu, const Vec4& x) const override {
    return s_ * inner_.impl().position_derivative(pair, nu, x);
  }
  SupportRegion support() const override { return inner_.support(); }
  bool position_evaluable() const override { return inner_.position_evaluable(); }

 private:
  double s_;
  TwoForm inner_;
};

class SumTwoForm : public TwoFormImpl {
 public:
  SumTwoForm(TwoForm a, TwoForm b) : a_(std::move(a)), b_(std::move(b)) {}
  Complex momentum(int pair, const Vec4& p) const override {
    return a_.momentum_pair(pair, p) + b_.momentum_pair(pair, p);
  }
  double position(int pair, const Vec4& x) const override {
    return a_.impl().position(pair, x) + b_.impl().position(pair, x);
  }
  double position_derivative(int pair, int nu, const Vec4& x) const override {
    return a_.impl().position_derivative(pair, nu, x) +
           b_.impl().position_derivative(pair, nu, x);
  }
  SupportRegion support() const override {
    SupportRegion s = a_.support();
    s.add(b_.support());
    return s;
  }
  bool position_evaluable() const override {
    return a_.position_evaluable() && b_.position_evaluable();
  }

 private:
  TwoForm a_, b_;
};

class TranslatedTwoForm : public TwoFormImpl {
 public:
  TranslatedTwoForm(TwoForm inner, const Vec4& y)
      : inner_(std::move(inner)), y_(y) {}
  Complex momentum(int pair, const Vec4& p) const override {
    // G_y(x) = G(x - y) -> Ghat_y(p) = e^{i p.y} Ghat(p)
    const Complex phase = std::polar(1.0, minkowski(p, y_));
    return phase * inner_.momentum_pair(pair, p);
  }
  double position(int pair, const Vec4& x) const override {
    return inner_.impl().position(pair, x - y_);
  }
  double position_derivative(int pair, int nu, const Vec4& x) const override {
    return inner_.impl().position_derivative(pair, nu, x - y_);
  }
  SupportRegion support() const override {
    return inner_.support().translated(y_);
  }
  bool position_evaluable() const override { return inner_.position_evaluable(); }

 private:
  TwoForm inner_;
  Vec4 y_;
};

}  // namespace

TwoForm hodge_star(const TwoForm& G) {
  return TwoForm(std::make_shared<StarTwoForm>(G));
}

TwoForm operator*(double s, const TwoForm& G) {
  return TwoForm(std::make_shared<ScaledTwoForm>(s, G));
}

TwoForm operator+(const TwoForm& a, const TwoForm& b) {
  return TwoForm(std::make_shared<SumTwoForm>(a, b));
}

TwoForm translate(const TwoForm& G, const Vec4& y) {
  return TwoForm(std::make_shared<TranslatedTwoForm>(G, y));
}

Mat4 gbar(const TwoForm& G) {
  Mat4 m{};
  const Vec4 zero{};
  for (int pair = 0; pair < 6; ++pair) {
    const Complex v = G.momentum_pair(pair, zero);
    const int a = kPairFirst[pair], b = kPairSecond[pair];
    m[a][b] = v.real();
    m[b][a] = -v.real();
  }
  return m;
}

double type_indicator(const Mat4& m) {
  double e2 = 0.0, b2 = 0.0;
  for (int i = 1; i < 4; ++i) e2 += m[0][i] * m[0][i];
  b2 = m[1][2] * m[1][2] + m[1][3] * m[1][3] + m[2][3] * m[2][3];
  return e2 - b2;
}

double type_indicator(const TwoForm& G) { return type_indicator(gbar(G)); }

// ---------------------------------------------------------------------------
// OneForm

OneFormPiece OneFormPiece::with_coprimitive(TwoForm G) const {
  OneFormPiece p = *this;
  p.coprimitive_ = std::move(G);
  return p;
}

OneFormPiece OneFormPiece::with_kappa(double k) const {
  OneFormPiece p = *this;
  p.kappa_ = k;
  return p;
}

namespace {

class ScaledPiece : public PieceImpl {
 public:
  ScaledPiece(double s, std::shared_ptr<const PieceImpl> inner)
      : s_(s), inner_(std::move(inner)) {}
  CVec4 momentum(const Vec4& p) const override {
    CVec4 v = inner_->momentum(p);
    for (auto& c : v) c *= s_;
    return v;
  }
  Vec4 position(const Vec4& x) const override {
    Vec4 v = inner_->position(x);
    return s_ * v;
  }
  double divergence(const Vec4& x) const override {
    return s_ * inner_->divergence(x);
  }
  SupportRegion support() const override { return inner_->support(); }
  bool position_evaluable() const override { return inner_->position_evaluable(); }

 private:
  double s_;
  std::shared_ptr<const PieceImpl> inner_;
};

class TranslatedPiece : public PieceImpl {
 public:
  TranslatedPiece(std::shared_ptr<const PieceImpl> inner, const Vec4& y)
      : inner_(std::move(inner)), y_(y) {}
  CVec4 momentum(const Vec4& p) const override {
    CVec4 v = inner_->momentum(p);
    const Complex phase = std::polar(1.0, minkowski(p, y_));
    for (auto& c : v) c *= phase;
    return v;
  }
  Vec4 position(const Vec4& x) const override { return inner_->position(x - y_); }
  double divergence(const Vec4& x) const override {
    return inner_->divergence(x - y_);
  }
  SupportRegion support() const override {
    return inner_->support().translated(y_);
  }
  bool position_evaluable() const override { return inner_->position_evaluable(); }

 private:
  std::shared_ptr<const PieceImpl> inner_;
  Vec4 y_;
};

class PieceSum : public PieceImpl {
 public:
  PieceSum(OneFormPiece a, OneFormPiece b) : a_(std::move(a)), b_(std::move(b)) {}
  CVec4 momentum(const Vec4& p) const override {
    CVec4 va = a_.momentum(p);
    const CVec4 vb = b_.momentum(p);
    for (int i = 0; i < 4; ++i) va[i] += vb[i];
    return va;
  }
  Vec4 position(const Vec4& x) const override {
    return a_.position(x) + b_.position(x);
  }
  double divergence(const Vec4& x) const override {
    return a_.divergence(x) + b_.divergence(x);
  }
  SupportRegion support() const override {
    SupportRegion s = a_.support();
    s.add(b_.support());
    return s;
  }
  bool position_evaluable() const override {
    return a_.position_evaluable() && b_.position_evaluable();
  }

 private:
  OneFormPiece a_, b_;
};

class CoderivativePiece : public PieceImpl {
 public:
  explicit CoderivativePiece(TwoForm G) : G_(std::move(G)) {}
  CVec4 momentum(const Vec4& p) const override {
    CVec4 u = G_.contraction(p);
    for (auto& c : u) c *= Complex(0.0, -1.0);
    return u;
  }
  Vec4 position(const Vec4& x) const override {
    // (dlt G)^mu = d_nu G^{mu nu}
    Vec4 g{};
    for (int pair = 0; pair < 6; ++pair) {
      const int a = kPairFirst[pair], b = kPairSecond[pair];
      g[a] += G_.impl().position_derivative(pair, b, x);
      g[b] -= G_.impl().position_derivative(pair, a, x);
    }
    return g;
  }
  double divergence(const Vec4&) const override { return 0.0; }  // dlt^2 = 0
  SupportRegion support() const override { return G_.support(); }
  bool position_evaluable() const override { return G_.position_evaluable(); }

 private:
  TwoForm G_;
};

}  // namespace

OneFormPiece OneFormPiece::scaled(double s) const {
  OneFormPiece p(std::make_shared<ScaledPiece>(s, impl_), connected_);
  if (coprimitive_) p.coprimitive_ = s * (*coprimitive_);
  if (kappa_) p.kappa_ = s * (*kappa_);
  return p;
}

OneFormPiece OneFormPiece::translated(const Vec4& y) const {
  OneFormPiece p(std::make_shared<TranslatedPiece>(impl_, y), connected_);
  if (coprimitive_) p.coprimitive_ = translate(*coprimitive_, y);
  if (kappa_) p.kappa_ = kappa_;
  return p;
}

OneFormPiece coderivative(const TwoForm& G) {
  if (!G.position_evaluable())
    throw NotDifferentiableError(
        "coderivative of a two-form with dirac_limit factors is not "
        "position-differentiable");
  return OneFormPiece(std::make_shared<CoderivativePiece>(G));
}

OneFormPiece piece_sum(const OneFormPiece& a, const OneFormPiece& b) {
  OneFormPiece p(std::make_shared<PieceSum>(a, b));
  if (a.coprimitive() && b.coprimitive())
    p = p.with_coprimitive(*a.coprimitive() + *b.coprimitive());
  if (a.kappa() && b.kappa()) p = p.with_kappa(*a.kappa() + *b.kappa());
  return p;
}

CVec4 OneForm::momentum(const Vec4& p) const {
  CVec4 v{};
  for (const auto& piece : pieces) {
    const CVec4 u = piece.momentum(p);
    for (int i = 0; i < 4; ++i) v[i] += u[i];
  }
  return v;
}

SupportRegion OneForm::support() const {
  SupportRegion s;
  for (const auto& piece : pieces) s.add(piece.support());
  return s;
}

}  // namespace loopfield
