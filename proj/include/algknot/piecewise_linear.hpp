#pragma once

#include <vector>

#include <json.hpp>

#include "algknot/numbers.hpp"

namespace algknot {

struct Breakpoint {
  Rat t;
  Rat v;
  bool operator==(const Breakpoint& o) const { return t == o.t && v == o.v; }
};

/// y = slope * t + intercept.
struct AffineLine {
  Int slope;
  Int intercept;
};

/// An exact-rational piecewise-linear function on a closed interval,
/// stored as breakpoints with no redundant (collinear) interior points.
class PiecewiseLinear {
 public:
  /// Requires strictly increasing t; collapses collinear interior points.
  static PiecewiseLinear from_breakpoints(std::vector<Breakpoint> pts);

  /// Exact upper envelope max_i(slope_i * t + intercept_i) on [lo, hi].
  /// Ties in slope keep the larger intercept.
  static PiecewiseLinear upper_envelope(std::vector<AffineLine> lines,
                                        const Rat& lo, const Rat& hi);

  const std::vector<Breakpoint>& breakpoints() const { return pts_; }
  const Rat& domain_min() const { return pts_.front().t; }
  const Rat& domain_max() const { return pts_.back().t; }

  /// Throws InvalidInput with OutOfDomain outside [domain_min, domain_max].
  Rat evaluate(const Rat& t) const;

  /// Slope of segment i (between breakpoints i and i+1).
  Rat segment_slope(std::size_t i) const;
  std::size_t segment_count() const { return pts_.size() - 1; }

  /// Slopes nondecreasing across all segments.
  bool is_convex() const;

  /// For f on [0,1]: the reflection f(2-t) glued at t = 1, on [0,2].
  PiecewiseLinear extend_symmetric() const;

  bool operator==(const PiecewiseLinear& o) const { return pts_ == o.pts_; }

  /// JSON list of {"t": "p/q", "v": "p/q"} in lowest terms.
  nlohmann::json to_json() const;

 private:
  PiecewiseLinear() = default;
  std::vector<Breakpoint> pts_;
};

/// Pointwise a - b; domains must coincide. Breakpoints are merged and
/// collinear points collapsed.
PiecewiseLinear subtract(const PiecewiseLinear& a, const PiecewiseLinear& b);

}  // namespace algknot
