#include "loopfield/profile.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "loopfield/cache.hpp"
#include "loopfield/errors.hpp"

namespace loopfield {

namespace {

std::mutex g_table_mu;
std::map<std::uint64_t, std::shared_ptr<const Interp1D>> g_tables;

// centered, unit-amplitude bump
double bump_shape(double u, double w) {
  const double d = w * w - u * u;
  if (d <= 0.0) return 0.0;
  return std::exp(-w * w / d);
}

double bump_shape_deriv(double u, double w) {
  const double d = w * w - u * u;
  if (d <= 0.0) return 0.0;
  return std::exp(-w * w / d) * (-2.0 * w * w * u / (d * d));
}

// cos-transform table of the centered unit bump on [0, kTransformRange]
std::shared_ptr<const Interp1D> build_bump_table(double w, std::uint64_t key) {
  if (auto payload = cache::load(key)) {
    const auto& p = *payload;
    if (p.size() > 3 && p[0] == w) {
      const double h = p[1];
      std::vector<double> y(p.begin() + 3, p.end());
      if (y.size() == static_cast<std::size_t>(p[2]))
        return std::make_shared<Interp1D>(0.0, h, std::move(y));
    }
  }
  const double h = 0.02;
  const std::size_t n = static_cast<std::size_t>(kTransformRange / h) + 4;
  // enough panels to resolve the fastest oscillation over the support
  const int panels = std::max(8, static_cast<int>(std::ceil(2.0 * w * kTransformRange / 8.0)));
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double om = h * static_cast<double>(i);
    y[i] = integrate_panels(
        [&](double u) { return std::cos(om * u) * bump_shape(u, w); }, -w, w,
        panels, 12);
  }
  std::vector<double> payload;
  payload.reserve(n + 3);
  payload.push_back(w);
  payload.push_back(h);
  payload.push_back(static_cast<double>(n));
  payload.insert(payload.end(), y.begin(), y.end());
  cache::store(key, payload);
  return std::make_shared<Interp1D>(0.0, h, std::move(y));
}

}  // namespace

Profile1D::Profile1D(ProfileKind k, double c, double w, double a)
    : kind_(k), center_(c), width_(w), amplitude_(a) {
  if (k != ProfileKind::DiracLimit && !(w > 0.0))
    throw InvalidProfileError("profile width must be positive");
  if (!std::isfinite(c) || !std::isfinite(a) || !std::isfinite(w))
    throw InvalidProfileError("profile parameters must be finite");
}

Profile1D Profile1D::bump(double c, double w, double a) {
  return Profile1D(ProfileKind::Bump, c, w, a);
}
Profile1D Profile1D::gaussian(double c, double w, double a) {
  return Profile1D(ProfileKind::Gaussian, c, w, a);
}
Profile1D Profile1D::dirac_limit(double c, double a) {
  return Profile1D(ProfileKind::DiracLimit, c, 0.0, a);
}

double Profile1D::value(double x) const {
  const double u = x - center_;
  switch (kind_) {
    case ProfileKind::Bump:
      return amplitude_ * bump_shape(u, width_);
    case ProfileKind::Gaussian:
      return amplitude_ * std::exp(-0.5 * u * u / (width_ * width_));
    case ProfileKind::DiracLimit:
      throw InvalidProfileError(
          "dirac_limit profiles cannot be evaluated in position space");
  }
  return 0.0;
}

double Profile1D::derivative(double x) const {
  const double u = x - center_;
  switch (kind_) {
    case ProfileKind::Bump:
      return amplitude_ * bump_shape_deriv(u, width_);
    case ProfileKind::Gaussian:
      return amplitude_ * std::exp(-0.5 * u * u / (width_ * width_)) *
             (-u / (width_ * width_));
    case ProfileKind::DiracLimit:
      throw NotDifferentiableError(
          "dirac_limit profiles cannot be evaluated in position space");
  }
  return 0.0;
}

double Profile1D::support_radius() const {
  switch (kind_) {
    case ProfileKind::Bump:
      return width_;
    case ProfileKind::Gaussian:
      return 8.5 * width_;
    case ProfileKind::DiracLimit:
      return 0.0;
  }
  return 0.0;
}

double Profile1D::integral() const {
  switch (kind_) {
    case ProfileKind::Bump: {
      ensure_table();
      return amplitude_ * (*table_)(0.0);
    }
    case ProfileKind::Gaussian:
      return amplitude_ * std::sqrt(kTwoPi) * width_;
    case ProfileKind::DiracLimit:
      return amplitude_;
  }
  return 0.0;
}

Profile1D Profile1D::normalized() const {
  const double I = integral();
  if (I == 0.0) throw InvalidProfileError("cannot normalize a zero profile");
  Profile1D p = *this;
  p.amplitude_ /= I;
  return p;
}

Profile1D Profile1D::scaled(double s) const {
  Profile1D p = *this;
  p.amplitude_ *= s;
  return p;
}

Profile1D Profile1D::shifted(double dc) const {
  Profile1D p = *this;
  p.center_ += dc;
  p.table_.reset();  // table depends only on the shape, but keep keys clean
  return p;
}

Complex Profile1D::fourier(double omega) const {
  const Complex phase = std::polar(1.0, omega * center_);
  switch (kind_) {
    case ProfileKind::Bump: {
      ensure_table();
      return amplitude_ * (*table_)(std::abs(omega)) * phase;
    }
    case ProfileKind::Gaussian:
      return amplitude_ * std::sqrt(kTwoPi) * width_ *
             std::exp(-0.5 * width_ * width_ * omega * omega) * phase;
    case ProfileKind::DiracLimit:
      return amplitude_ * phase;
  }
  return {};
}

std::uint64_t Profile1D::shape_hash() const {
  std::uint64_t h = fnv1a("profile", 7);
  h = hash_mix(h, static_cast<std::uint64_t>(kind_));
  h = hash_mix(h, width_);
  h = hash_mix(h, center_);
  return h;
}

void Profile1D::ensure_table() const {
  if (table_) return;
  // table is for the centered, unit-amplitude shape
  std::uint64_t key = fnv1a("bump-ft", 7);
  key = hash_mix(key, width_);
  key = hash_mix(key, kTransformRange);
  {
    std::lock_guard lk(g_table_mu);
    auto it = g_tables.find(key);
    if (it != g_tables.end()) {
      table_ = it->second;
      return;
    }
  }
  auto t = build_bump_table(width_, key);
  std::lock_guard lk(g_table_mu);
  auto [it, inserted] = g_tables.emplace(key, std::move(t));
  table_ = it->second;
}

}  // namespace loopfield
