#pragma once
// Support geometry: unions of axis-aligned 4-boxes and solid tori, with
// conservative separation predicates.  "Conservative" means: a true answer
// is a guarantee (every point pair is spacelike separated / the sets are
// disjoint); a false answer may just be inconclusive.

#include <variant>
#include <vector>

#include "loopfield/conventions.hpp"

namespace loopfield {

struct BoxRegion {
  // [lo, hi] per coordinate, index 0 = time
  std::array<double, 4> lo{}, hi{};
};

struct TorusRegion {
  int ci = 1, ck = 2;        // spatial plane of the core circle
  Vec4 center{};             // center[0] is the circle's time coordinate
  double major_radius = 1.0;
  double tube_radius = 0.1;  // spatial tube around the core circle
  double time_half = 0.1;    // half-extent in time
};

class SupportRegion {
 public:
  SupportRegion() = default;
  static SupportRegion box(const BoxRegion& b);
  static SupportRegion torus(const TorusRegion& t);

  SupportRegion& add(const SupportRegion& other);
  const std::vector<std::variant<BoxRegion, TorusRegion>>& parts() const {
    return parts_;
  }
  bool empty() const { return parts_.empty(); }

  // true when built only from compactly supported profiles; gaussian-backed
  // regions use a tail cut and are flagged approximate
  bool exact() const { return exact_; }
  void mark_approximate() { exact_ = false; }

  BoxRegion bounding_box() const;
  SupportRegion translated(const Vec4& y) const;
  bool contains(const Vec4& x) const;  // conservative cover test

 private:
  std::vector<std::variant<BoxRegion, TorusRegion>> parts_;
  bool exact_ = true;
};

// every point pair (x,y) across the regions satisfies (x-y)^2 < 0
bool spacelike_separated(const SupportRegion& a, const SupportRegion& b);

// the closures do not intersect
bool disjoint(const SupportRegion& a, const SupportRegion& b);

// separable by two opposite characteristic wedges (conservative stand-in:
// spacelike separation with a margin of twice the joint time extent)
bool wedge_separated(const SupportRegion& a, const SupportRegion& b);

}  // namespace loopfield
