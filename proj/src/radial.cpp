#include "loopfield/radial.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "loopfield/cache.hpp"
#include "loopfield/errors.hpp"

namespace loopfield {

namespace {

std::mutex g_mu;
std::map<std::uint64_t, std::shared_ptr<const RadialTables>> g_registry;

void check_b(const Profile1D& b) {
  if (b.kind() == ProfileKind::DiracLimit)
    throw InvalidProfileError("radial factor b cannot be a dirac_limit");
  if (std::abs(b.center()) + b.support_radius() >= 1.0)
    throw ConventionError(
        "radial factor b must satisfy |center| + width < 1 "
        "(support would reach r = 0)");
}

// band of c in r: |r - 1| < sqrt(|center| + support_radius)
double band_halfwidth_of(const Profile1D& b) {
  return std::sqrt(std::abs(b.center()) + b.support_radius());
}

constexpr int kPosNodes = 3001;
constexpr int kCNodes = 4001;
constexpr double kQStep = 0.02;
constexpr double kPad = 0.01;

}  // namespace

double radial_c(const Profile1D& b, double r2, int t_nodes) {
  check_b(b);
  if (r2 < 0.0) throw GeometryError("radial_c requires r2 >= 0");
  const double r = std::sqrt(r2);
  const double bw = band_halfwidth_of(b);
  if (std::abs(r - 1.0) > bw + 1e-12) return 0.0;
  // midpoint rule in t: periodic smooth integrand, spectrally accurate
  double sum = 0.0;
  for (int i = 0; i < t_nodes; ++i) {
    const double t = (i + 0.5) / t_nodes;
    const double ct = std::cos(kTwoPi * t);
    sum += ct * b.value(r2 - 2.0 * r * ct + 1.0);
  }
  return sum / (t_nodes * r);
}

double radial_C(const Profile1D& b, double r2) {
  check_b(b);
  if (r2 < 0.0) throw GeometryError("radial_C requires r2 >= 0");
  const double bw = band_halfwidth_of(b);
  const double hi = 1.0 + bw + kPad;
  const double r = std::sqrt(r2);
  if (r >= hi) return 0.0;
  const double lo = std::max(r, 1.0 - bw - kPad);
  if (lo >= hi) return 0.0;
  // C(r^2) = -\int_r^inf 2 rho c(rho^2) drho
  return -integrate_panels(
      [&](double rho) { return 2.0 * rho * radial_c(b, rho * rho); }, lo, hi,
      24, 12);
}

double HankelTable::H0(double q) const {
  const double aq = std::abs(q);
  if (aq < series_cut) {
    const double q2 = aq * aq;
    return kTwoPi * (M1 - q2 * M3 / 4.0 + q2 * q2 * M5 / 64.0 -
                     q2 * q2 * q2 * M7 / 2304.0);
  }
  return h0(aq);
}

double HankelTable::H1(double q) const {
  const double s = q < 0 ? -1.0 : 1.0;
  const double aq = std::abs(q);
  if (aq < series_cut) {
    const double q2 = aq * aq;
    return s * kTwoPi *
           (aq * M3 / 2.0 - aq * q2 * M5 / 16.0 + aq * q2 * q2 * M7 / 384.0);
  }
  return s * h1(aq);
}

double HankelTable::H1_over_q(double q) const {
  const double aq = std::abs(q);
  if (aq < series_cut) {
    const double q2 = aq * aq;
    return kTwoPi * (M3 / 2.0 - q2 * M5 / 16.0 + q2 * q2 * M7 / 384.0);
  }
  return h1(aq) / aq;
}

namespace {

HankelTable build_hankel(const std::function<double(double)>& f_of_r,
                         double r_lo, double r_hi) {
  HankelTable t;
  const std::size_t nq = static_cast<std::size_t>(kTransformRange / kQStep) + 4;
  std::vector<double> y0(nq), y1(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    const double q = kQStep * static_cast<double>(i);
    // resolve the J oscillation over the radial support
    const int panels =
        std::max(6, static_cast<int>(std::ceil(q * (r_hi - r_lo) / 4.0)));
    y0[i] = kTwoPi * integrate_panels(
                         [&](double r) {
                           return r * std::cyl_bessel_j(0, q * r) * f_of_r(r);
                         },
                         r_lo, r_hi, panels, 12);
    y1[i] = kTwoPi * integrate_panels(
                         [&](double r) {
                           return r * r * std::cyl_bessel_j(1, q * r) * f_of_r(r);
                         },
                         r_lo, r_hi, panels, 12);
  }
  t.h0 = Interp1D(0.0, kQStep, std::move(y0));
  t.h1 = Interp1D(0.0, kQStep, std::move(y1));
  auto moment = [&](int k) {
    return integrate_panels(
        [&](double r) { return std::pow(r, k) * f_of_r(r); }, r_lo, r_hi, 24,
        12);
  };
  t.M1 = moment(1);
  t.M3 = moment(3);
  t.M5 = moment(5);
  t.M7 = moment(7);
  return t;
}

void append_interp(std::vector<double>& out, const Interp1D& t) {
  out.push_back(t.x_min());
  out.push_back(t.step());
  out.push_back(static_cast<double>(t.values().size()));
  out.insert(out.end(), t.values().begin(), t.values().end());
}

bool read_interp(const std::vector<double>& in, std::size_t& pos, Interp1D& t) {
  if (pos + 3 > in.size()) return false;
  const double x0 = in[pos], h = in[pos + 1];
  const std::size_t n = static_cast<std::size_t>(in[pos + 2]);
  pos += 3;
  if (pos + n > in.size() || h <= 0.0) return false;
  std::vector<double> y(in.begin() + pos, in.begin() + pos + n);
  pos += n;
  t = Interp1D(x0, h, std::move(y));
  return true;
}

void append_hankel(std::vector<double>& out, const HankelTable& t) {
  append_interp(out, t.h0);
  append_interp(out, t.h1);
  out.push_back(t.M1);
  out.push_back(t.M3);
  out.push_back(t.M5);
  out.push_back(t.M7);
}

bool read_hankel(const std::vector<double>& in, std::size_t& pos, HankelTable& t) {
  if (!read_interp(in, pos, t.h0)) return false;
  if (!read_interp(in, pos, t.h1)) return false;
  if (pos + 4 > in.size()) return false;
  t.M1 = in[pos];
  t.M3 = in[pos + 1];
  t.M5 = in[pos + 2];
  t.M7 = in[pos + 3];
  pos += 4;
  return true;
}

}  // namespace

std::shared_ptr<const RadialTables> RadialTables::make(const Profile1D& b0) {
  check_b(b0);
  const Profile1D b = b0.scaled(1.0 / b0.amplitude());  // unit amplitude
  std::uint64_t key = fnv1a("radial-tables-v1", 16);
  key = hash_mix(key, b.shape_hash());
  key = hash_mix(key, kTransformRange);
  {
    std::lock_guard lk(g_mu);
    auto it = g_registry.find(key);
    if (it != g_registry.end()) return it->second;
  }

  auto tabs = std::shared_ptr<RadialTables>(new RadialTables());
  tabs->key_ = key;
  const double bw = band_halfwidth_of(b);
  tabs->band_lo_ = std::max(1.0 - bw - kPad, 1e-9);
  tabs->band_hi_ = 1.0 + bw + kPad;
  tabs->r_hi_ = tabs->band_hi_;

  bool loaded = false;
  if (auto payload = cache::load(key)) {
    std::size_t pos = 0;
    const auto& p = *payload;
    if (p.size() > 8 && p[0] == b.width() && p[1] == b.center()) {
      pos = 2;
      double plateau = 0.0;
      if (pos < p.size()) plateau = p[pos++];
      Interp1D cpos, Cpos;
      HankelTable hc, hC, hb;
      if (read_interp(p, pos, cpos) && read_interp(p, pos, Cpos) &&
          read_hankel(p, pos, hc) && read_hankel(p, pos, hC) &&
          read_hankel(p, pos, hb) && pos == p.size()) {
        tabs->plateau_ = plateau;
        tabs->c_pos_ = std::move(cpos);
        tabs->C_pos_ = std::move(Cpos);
        tabs->Hc_ = std::move(hc);
        tabs->HC_ = std::move(hC);
        tabs->Hb_ = std::move(hb);
        loaded = true;
      }
    }
  }

  if (!loaded) {
    // c on the band
    {
      const double lo = tabs->band_lo_, hi = tabs->band_hi_;
      const double h = (hi - lo) / (kPosNodes - 1);
      std::vector<double> y(kPosNodes);
      for (int i = 0; i < kPosNodes; ++i) {
        const double r = lo + h * i;
        y[i] = radial_c(b, r * r);
      }
      tabs->c_pos_ = Interp1D(lo, h, std::move(y));
    }
    // C on [0, r_hi]: C(r^2) = -\int_r^hi 2 rho c(rho^2) drho, using the
    // c table just built
    {
      const double hi = tabs->r_hi_;
      const double h = hi / (kCNodes - 1);
      auto c_of_r = [&](double r) { return tabs->c_pos_(r); };
      std::vector<double> y(kCNodes);
      for (int i = 0; i < kCNodes; ++i) {
        const double r = h * i;
        const double lo = std::max(r, tabs->band_lo_);
        y[i] = (lo >= hi) ? 0.0
                          : -integrate_panels(
                                [&](double rho) { return 2.0 * rho * c_of_r(rho); },
                                lo, hi, 24, 12);
      }
      tabs->plateau_ = y[0];
      tabs->C_pos_ = Interp1D(0.0, h, std::move(y));
    }
    tabs->Hc_ = build_hankel([&](double r) { return tabs->c_pos_(r); },
                             tabs->band_lo_, tabs->band_hi_);
    tabs->HC_ = build_hankel([&](double r) { return tabs->C_pos_(r); }, 0.0,
                             tabs->r_hi_);
    tabs->Hb_ = build_hankel(
        [&](double r) { return b.value(r * r); }, 0.0,
        std::sqrt(std::abs(b.center()) + b.support_radius()) + 1e-9);
    std::vector<double> payload;
    payload.push_back(b.width());
    payload.push_back(b.center());
    payload.push_back(tabs->plateau_);
    append_interp(payload, tabs->c_pos_);
    append_interp(payload, tabs->C_pos_);
    append_hankel(payload, tabs->Hc_);
    append_hankel(payload, tabs->HC_);
    append_hankel(payload, tabs->Hb_);
    cache::store(key, payload);
  }

  std::lock_guard lk(g_mu);
  auto [it, inserted] = g_registry.emplace(key, tabs);
  return it->second;
}

double RadialTables::c_at_r2(double r2) const {
  if (r2 < 0.0) return 0.0;
  return c_pos_(std::sqrt(r2));
}

double RadialTables::C_at_r2(double r2) const {
  if (r2 < 0.0) return 0.0;
  const double r = std::sqrt(r2);
  if (r >= r_hi_) return 0.0;
  if (r <= band_lo_) return plateau_;
  return C_pos_(r);
}

double RadialTables::c_deriv_u(double r2) const {
  if (r2 <= 0.0) return 0.0;
  const double r = std::sqrt(r2);
  // d/du c(u) = (1/2r) d/dr c(r^2)
  return c_pos_.derivative(r) / (2.0 * r);
}

const HankelTable& RadialTables::hankel(RadialKind k) const {
  switch (k) {
    case RadialKind::c: return Hc_;
    case RadialKind::C: return HC_;
    case RadialKind::b: return Hb_;
  }
  return Hc_;
}

}  // namespace loopfield
