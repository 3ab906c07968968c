#include "loopfield/support.hpp"

#include <algorithm>
#include <cmath>

namespace loopfield {

namespace {

constexpr int kCircleSamples = 512;

struct Extent {
  double d_spatial_min;  // lower bound on spatial distance
  double t_gap_max;      // upper bound on |t1 - t2|
};

Vec4 torus_point(const TorusRegion& t, int i) {
  const double phi = kTwoPi * i / kCircleSamples;
  Vec4 p = t.center;
  p[t.ci] += t.major_radius * std::cos(phi);
  p[t.ck] += t.major_radius * std::sin(phi);
  return p;
}

double spatial_dist(const Vec4& a, const Vec4& b) {
  return std::sqrt((a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]) +
                   (a[3] - b[3]) * (a[3] - b[3]));
}

double box_spatial_dist(const BoxRegion& b, const Vec4& p) {
  double s = 0.0;
  for (int j = 1; j < 4; ++j) {
    const double g = std::max({b.lo[j] - p[j], p[j] - b.hi[j], 0.0});
    s += g * g;
  }
  return std::sqrt(s);
}

double time_gap_max(double lo1, double hi1, double lo2, double hi2) {
  return std::max(std::abs(hi1 - lo2), std::abs(hi2 - lo1));
}

// sampled minimum distance between core circles, minus a Lipschitz margin
Extent extent(const TorusRegion& a, const TorusRegion& b) {
  double dmin = 1e300;
  for (int i = 0; i < kCircleSamples; ++i) {
    const Vec4 pa = torus_point(a, i);
    for (int j = 0; j < kCircleSamples; ++j)
      dmin = std::min(dmin, spatial_dist(pa, torus_point(b, j)));
  }
  const double margin =
      kPi * (a.major_radius + b.major_radius) / kCircleSamples;
  Extent e;
  e.d_spatial_min = dmin - margin - a.tube_radius - b.tube_radius;
  e.t_gap_max = time_gap_max(a.center[0] - a.time_half, a.center[0] + a.time_half,
                             b.center[0] - b.time_half, b.center[0] + b.time_half);
  return e;
}

Extent extent(const BoxRegion& a, const BoxRegion& b) {
  double s = 0.0;
  for (int j = 1; j < 4; ++j) {
    const double g = std::max({a.lo[j] - b.hi[j], b.lo[j] - a.hi[j], 0.0});
    s += g * g;
  }
  Extent e;
  e.d_spatial_min = std::sqrt(s);
  e.t_gap_max = time_gap_max(a.lo[0], a.hi[0], b.lo[0], b.hi[0]);
  return e;
}

Extent extent(const BoxRegion& a, const TorusRegion& b) {
  double dmin = 1e300;
  for (int j = 0; j < kCircleSamples; ++j)
    dmin = std::min(dmin, box_spatial_dist(a, torus_point(b, j)));
  Extent e;
  e.d_spatial_min =
      dmin - kPi * b.major_radius / kCircleSamples - b.tube_radius;
  e.t_gap_max = time_gap_max(a.lo[0], a.hi[0], b.center[0] - b.time_half,
                             b.center[0] + b.time_half);
  return e;
}

Extent extent(const TorusRegion& a, const BoxRegion& b) { return extent(b, a); }

Extent part_extent(const std::variant<BoxRegion, TorusRegion>& a,
                   const std::variant<BoxRegion, TorusRegion>& b) {
  return std::visit([](const auto& x, const auto& y) { return extent(x, y); },
                    a, b);
}

double part_time_extent(const std::variant<BoxRegion, TorusRegion>& p) {
  if (const auto* b = std::get_if<BoxRegion>(&p)) return b->hi[0] - b->lo[0];
  return 2.0 * std::get<TorusRegion>(p).time_half;
}

}  // namespace

SupportRegion SupportRegion::box(const BoxRegion& b) {
  SupportRegion r;
  r.parts_.push_back(b);
  return r;
}

SupportRegion SupportRegion::torus(const TorusRegion& t) {
  SupportRegion r;
  r.parts_.push_back(t);
  return r;
}

SupportRegion& SupportRegion::add(const SupportRegion& other) {
  parts_.insert(parts_.end(), other.parts_.begin(), other.parts_.end());
  exact_ = exact_ && other.exact_;
  return *this;
}

BoxRegion SupportRegion::bounding_box() const {
  BoxRegion out;
  for (int j = 0; j < 4; ++j) {
    out.lo[j] = 1e300;
    out.hi[j] = -1e300;
  }
  for (const auto& p : parts_) {
    BoxRegion pb;
    if (const auto* b = std::get_if<BoxRegion>(&p)) {
      pb = *b;
    } else {
      const auto& t = std::get<TorusRegion>(p);
      for (int j = 0; j < 4; ++j) {
        pb.lo[j] = t.center[j];
        pb.hi[j] = t.center[j];
      }
      pb.lo[0] -= t.time_half;
      pb.hi[0] += t.time_half;
      for (int j : {t.ci, t.ck}) {
        pb.lo[j] -= t.major_radius + t.tube_radius;
        pb.hi[j] += t.major_radius + t.tube_radius;
      }
      const int cl = 6 - t.ci - t.ck;
      pb.lo[cl] -= t.tube_radius;
      pb.hi[cl] += t.tube_radius;
    }
    for (int j = 0; j < 4; ++j) {
      out.lo[j] = std::min(out.lo[j], pb.lo[j]);
      out.hi[j] = std::max(out.hi[j], pb.hi[j]);
    }
  }
  return out;
}

SupportRegion SupportRegion::translated(const Vec4& y) const {
  SupportRegion out = *this;
  for (auto& p : out.parts_) {
    if (auto* b = std::get_if<BoxRegion>(&p)) {
      for (int j = 0; j < 4; ++j) {
        b->lo[j] += y[j];
        b->hi[j] += y[j];
      }
    } else {
      auto& t = std::get<TorusRegion>(p);
      t.center = t.center + y;
    }
  }
  return out;
}

bool SupportRegion::contains(const Vec4& x) const {
  for (const auto& p : parts_) {
    if (const auto* b = std::get_if<BoxRegion>(&p)) {
      bool in = true;
      for (int j = 0; j < 4; ++j)
        in = in && x[j] >= b->lo[j] && x[j] <= b->hi[j];
      if (in) return true;
    } else {
      const auto& t = std::get<TorusRegion>(p);
      if (std::abs(x[0] - t.center[0]) > t.time_half) continue;
      const double ri = x[t.ci] - t.center[t.ci];
      const double rk = x[t.ck] - t.center[t.ck];
      const int cl = 6 - t.ci - t.ck;
      const double rl = x[cl] - t.center[cl];
      const double d = std::hypot(std::hypot(ri, rk) - t.major_radius, rl);
      if (d <= t.tube_radius) return true;
    }
  }
  return false;
}

bool spacelike_separated(const SupportRegion& a, const SupportRegion& b) {
  if (a.empty() || b.empty()) return true;
  for (const auto& pa : a.parts())
    for (const auto& pb : b.parts()) {
      const Extent e = part_extent(pa, pb);
      if (!(e.d_spatial_min > e.t_gap_max)) return false;
    }
  return true;
}

bool disjoint(const SupportRegion& a, const SupportRegion& b) {
  if (a.empty() || b.empty()) return true;
  for (const auto& pa : a.parts())
    for (const auto& pb : b.parts()) {
      const Extent e = part_extent(pa, pb);
      // either separated in space or in time
      double t_gap_min;
      {
        // recompute a lower bound on the time gap from bounding intervals
        double lo1, hi1, lo2, hi2;
        auto time_iv = [](const std::variant<BoxRegion, TorusRegion>& p,
                          double& lo, double& hi) {
          if (const auto* bb = std::get_if<BoxRegion>(&p)) {
            lo = bb->lo[0];
            hi = bb->hi[0];
          } else {
            const auto& t = std::get<TorusRegion>(p);
            lo = t.center[0] - t.time_half;
            hi = t.center[0] + t.time_half;
          }
        };
        time_iv(pa, lo1, hi1);
        time_iv(pb, lo2, hi2);
        t_gap_min = std::max({lo2 - hi1, lo1 - hi2, 0.0});
      }
      if (!(e.d_spatial_min > 0.0 || t_gap_min > 0.0)) return false;
    }
  return true;
}

bool wedge_separated(const SupportRegion& a, const SupportRegion& b) {
  if (a.empty() || b.empty()) return true;
  double ext = 0.0;
  for (const auto& p : a.parts()) ext = std::max(ext, part_time_extent(p));
  for (const auto& p : b.parts()) ext = std::max(ext, part_time_extent(p));
  for (const auto& pa : a.parts())
    for (const auto& pb : b.parts()) {
      const Extent e = part_extent(pa, pb);
      if (!(e.d_spatial_min > e.t_gap_max + 2.0 * ext)) return false;
    }
  return true;
}

}  // namespace loopfield
