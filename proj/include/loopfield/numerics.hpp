#pragma once
// Small numerical kernels shared across the library: Gauss-Legendre rules,
// deterministic pairwise summation, uniform-grid cubic interpolation.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace loopfield {

struct GaussRule {
  std::vector<double> nodes;    // on [-1,1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n (cached per order, thread-safe).
const GaussRule& gauss_legendre(int n);

// Deterministic pairwise (tree) summation: fixed reduction order regardless
// of how the values were produced.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

// Composite Gauss-Legendre over [a,b] with `panels` equal panels.
template <typename F>
double integrate_panels(F&& f, double a, double b, int panels, int order) {
  const GaussRule& g = gauss_legendre(order);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(panels) * g.nodes.size());
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      vals.push_back(g.weights[i] * 0.5 * h * f(mid + 0.5 * h * g.nodes[i]));
  }
  return pairwise_sum(vals);
}

// Cubic (4-point Lagrange) interpolation on a uniform grid.  Evaluates to 0
// outside [x0, x0 + h*(n-1)]; tables are always built past the support or
// decay range of what they represent.
class Interp1D {
  double x0_ = 0.0, h_ = 1.0;
  std::vector<double> y_;

 public:
  Interp1D() = default;
  Interp1D(double x0, double h, std::vector<double> y)
      : x0_(x0), h_(h), y_(std::move(y)) {}

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + h_ * (static_cast<double>(y_.size()) - 1); }
  double step() const { return h_; }
  const std::vector<double>& values() const { return y_; }
  bool empty() const { return y_.empty(); }

  double operator()(double x) const {
    if (y_.empty()) return 0.0;
    const double u = (x - x0_) / h_;
    if (u < 0.0 || u > static_cast<double>(y_.size() - 1)) return 0.0;
    long j = static_cast<long>(u) - 1;
    const long nmax = static_cast<long>(y_.size()) - 4;
    if (j < 0) j = 0;
    if (j > nmax) j = nmax;
    const double t = u - static_cast<double>(j);
    // Lagrange basis on nodes {0,1,2,3}
    const double t0 = t, t1 = t - 1.0, t2 = t - 2.0, t3 = t - 3.0;
    const double l0 = -t1 * t2 * t3 / 6.0;
    const double l1 = t0 * t2 * t3 / 2.0;
    const double l2 = -t0 * t1 * t3 / 2.0;
    const double l3 = t0 * t1 * t2 / 6.0;
    const std::size_t k = static_cast<std::size_t>(j);
    return l0 * y_[k] + l1 * y_[k + 1] + l2 * y_[k + 2] + l3 * y_[k + 3];
  }

  // derivative of the interpolant (one order less accurate than the value)
  double derivative(double x) const {
    if (y_.empty()) return 0.0;
    const double u = (x - x0_) / h_;
    if (u < 0.0 || u > static_cast<double>(y_.size() - 1)) return 0.0;
    long j = static_cast<long>(u) - 1;
    const long nmax = static_cast<long>(y_.size()) - 4;
    if (j < 0) j = 0;
    if (j > nmax) j = nmax;
    const double t = u - static_cast<double>(j);
    const double t0 = t, t1 = t - 1.0, t2 = t - 2.0, t3 = t - 3.0;
    const double d0 = -(t1 * t2 + t1 * t3 + t2 * t3) / 6.0;
    const double d1 = (t0 * t2 + t0 * t3 + t2 * t3) / 2.0;
    const double d2 = -(t0 * t1 + t0 * t3 + t1 * t3) / 2.0;
    const double d3 = (t0 * t1 + t0 * t2 + t1 * t2) / 6.0;
    const std::size_t k = static_cast<std::size_t>(j);
    return (d0 * y_[k] + d1 * y_[k + 1] + d2 * y_[k + 2] + d3 * y_[k + 3]) / h_;
  }
};

// FNV-1a over raw bytes; used for cache keys.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t seed = 1469598103934665603ull) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= b[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t hash_mix(std::uint64_t h, double v) {
  return fnv1a(&v, sizeof v, h);
}
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  return fnv1a(&v, sizeof v, h);
}

}  // namespace loopfield
