#pragma once
// Test 2-forms G in D_2(R^4) and co-closed 1-forms g in C_1(R^4).
//
// Storage is contravariant throughout (see conventions.hpp).  A TwoForm keeps
// the six independent components G^{mu nu}, mu < nu; a OneForm is a list of
// pieces, each with its own momentum/position evaluators, support geometry,
// and optionally a co-primitive and class value.
//
// Component functions of product two-forms are finite sums of separable
// terms: products of Profile1D factors (one coordinate each) and at most one
// radial factor f(|x_perp - z|^2) over a spatial plane, f in {c, C, b}.

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "loopfield/conventions.hpp"
#include "loopfield/profile.hpp"
#include "loopfield/radial.hpp"
#include "loopfield/support.hpp"

namespace loopfield {

using Mat4 = std::array<std::array<double, 4>, 4>;

// ---------------------------------------------------------------------------
// separable factors

struct ProfileFactor {
  int coord = 0;
  Profile1D prof = Profile1D::bump(0.0, 1.0);
  int deriv = 0;  // 0 or 1

  // momentum-kernel frequency for this coordinate: +p^0 or -p^j
  double frequency(const Vec4& p) const {
    return coord == 0 ? p[0] : -p[coord];
  }
  Complex momentum(const Vec4& p) const {
    const double om = frequency(p);
    Complex v = prof.fourier(om);
    for (int d = 0; d < deriv; ++d) v *= Complex(0.0, -om);
    return v;
  }
  double position(const Vec4& x) const {
    return deriv == 0 ? prof.value(x[coord]) : prof.derivative(x[coord]);
  }
};

struct RadialFactor {
  int ci = 1, ck = 2;  // spatial plane
  std::shared_ptr<const RadialTables> tabs;
  RadialKind kind = RadialKind::C;
  double amp = 1.0;          // amplitude of the underlying b
  double zi = 0.0, zk = 0.0; // plane center

  Complex momentum(const Vec4& p) const {
    const double q = std::hypot(p[ci], p[ck]);
    const Complex phase = std::polar(1.0, -(p[ci] * zi + p[ck] * zk));
    return amp * tabs->hankel(kind).H0(q) * phase;
  }
  double position(const Vec4& x) const {
    const double r2 = (x[ci] - zi) * (x[ci] - zi) + (x[ck] - zk) * (x[ck] - zk);
    switch (kind) {
      case RadialKind::c: return amp * tabs->c_at_r2(r2);
      case RadialKind::C: return amp * tabs->C_at_r2(r2);
      case RadialKind::b: return 0.0;  // handled by the owning smear
    }
    return 0.0;
  }
  // d/dx_nu of the factor; nonzero only for nu in {ci, ck}
  double position_derivative(int nu, const Vec4& x) const {
    if (nu != ci && nu != ck) return 0.0;
    const double r2 = (x[ci] - zi) * (x[ci] - zi) + (x[ck] - zk) * (x[ck] - zk);
    const double w = nu == ci ? (x[ci] - zi) : (x[ck] - zk);
    double fprime = 0.0;
    switch (kind) {
      case RadialKind::C: fprime = tabs->c_at_r2(r2); break;    // dC/du = c
      case RadialKind::c: fprime = tabs->c_deriv_u(r2); break;
      case RadialKind::b: return 0.0;
    }
    return amp * 2.0 * w * fprime;
  }
};

struct Term {
  double coeff = 1.0;
  std::vector<ProfileFactor> profs;
  std::optional<RadialFactor> radial;

  Complex momentum(const Vec4& p) const;
  double position(const Vec4& x) const;
  double position_derivative(int nu, const Vec4& x) const;  // Leibniz
  bool position_evaluable() const;
};

// ---------------------------------------------------------------------------
// TwoForm

class TwoFormImpl {
 public:
  virtual ~TwoFormImpl() = default;
  // G^{pair}(p-hat): Fourier transform of the stored component
  virtual Complex momentum(int pair, const Vec4& p) const = 0;
  virtual double position(int pair, const Vec4& x) const = 0;
  // d_nu G^{pair}(x)
  virtual double position_derivative(int pair, int nu, const Vec4& x) const = 0;
  virtual SupportRegion support() const = 0;
  virtual bool position_evaluable() const { return true; }
};

class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::shared_ptr<const TwoFormImpl> impl)
      : impl_(std::move(impl)) {}

  bool empty() const { return impl_ == nullptr; }
  const TwoFormImpl& impl() const { return *impl_; }

  // G^{mu nu}(p-hat), any index order
  Complex momentum(int mu, int nu, const Vec4& p) const;
  double position(int mu, int nu, const Vec4& x) const;
  Complex momentum_pair(int pair, const Vec4& p) const {
    return impl_->momentum(pair, p);
  }

  // u^mu(p) = p_nu G-hat^{mu nu}(p); the light-cone contraction
  CVec4 contraction(const Vec4& p) const;

  SupportRegion support() const { return impl_->support(); }
  bool position_evaluable() const { return impl_->position_evaluable(); }

 private:
  std::shared_ptr<const TwoFormImpl> impl_;
};

class ProductTwoForm : public TwoFormImpl {
 public:
  ProductTwoForm(std::array<std::vector<Term>, 6> comps, SupportRegion supp)
      : comps_(std::move(comps)), supp_(std::move(supp)) {}
  Complex momentum(int pair, const Vec4& p) const override;
  double position(int pair, const Vec4& x) const override;
  double position_derivative(int pair, int nu, const Vec4& x) const override;
  SupportRegion support() const override { return supp_; }
  bool position_evaluable() const override;

 private:
  std::array<std::vector<Term>, 6> comps_;
  SupportRegion supp_;
};

TwoForm hodge_star(const TwoForm& G);
TwoForm operator*(double s, const TwoForm& G);
TwoForm operator+(const TwoForm& a, const TwoForm& b);
TwoForm translate(const TwoForm& G, const Vec4& y);

// Gbar^{mu nu} = \int dx G^{mu nu}(x) = Re G-hat^{mu nu}(0)
Mat4 gbar(const TwoForm& G);

// Ebar^2 - Bbar^2 with Ebar_i = Gbar^{0i}, Bbar from the spatial components.
// Positive selects the electric branch, negative the magnetic one.
double type_indicator(const TwoForm& G);
double type_indicator(const Mat4& gbar_matrix);

// ---------------------------------------------------------------------------
// OneForm

class PieceImpl {
 public:
  virtual ~PieceImpl() = default;
  virtual CVec4 momentum(const Vec4& p) const = 0;   // g-hat^mu(p)
  virtual Vec4 position(const Vec4& x) const = 0;    // g^mu(x)
  virtual double divergence(const Vec4& x) const = 0;  // (dlt g)(x)
  virtual SupportRegion support() const = 0;
  virtual bool position_evaluable() const { return true; }
};

class OneFormPiece {
 public:
  OneFormPiece() = default;
  OneFormPiece(std::shared_ptr<const PieceImpl> impl, bool connected = true)
      : impl_(std::move(impl)), connected_(connected) {}

  bool empty() const { return impl_ == nullptr; }
  CVec4 momentum(const Vec4& p) const { return impl_->momentum(p); }
  Vec4 position(const Vec4& x) const { return impl_->position(x); }
  double divergence(const Vec4& x) const { return impl_->divergence(x); }
  SupportRegion support() const { return impl_->support(); }
  bool connected() const { return connected_; }
  bool position_evaluable() const { return impl_->position_evaluable(); }

  const std::optional<TwoForm>& coprimitive() const { return coprimitive_; }
  const std::optional<double>& kappa() const { return kappa_; }
  OneFormPiece with_coprimitive(TwoForm G) const;
  OneFormPiece with_kappa(double k) const;

  OneFormPiece scaled(double s) const;
  OneFormPiece translated(const Vec4& y) const;

 private:
  std::shared_ptr<const PieceImpl> impl_;
  std::optional<TwoForm> coprimitive_;
  std::optional<double> kappa_;
  bool connected_ = true;
};

// g = dlt G as a OneForm piece.  Momentum evaluator is
// g-hat^mu(p) = -i p_nu G-hat^{mu nu}(p); position uses the analytic factor
// derivatives; divergence is 0 identically (dlt^2 = 0).
OneFormPiece coderivative(const TwoForm& G);

// sum of two pieces sharing one connected support region (eta-mixing);
// co-primitives and class values add
OneFormPiece piece_sum(const OneFormPiece& a, const OneFormPiece& b);

struct OneForm {
  std::vector<OneFormPiece> pieces;

  CVec4 momentum(const Vec4& p) const;
  SupportRegion support() const;
};

}  // namespace loopfield
