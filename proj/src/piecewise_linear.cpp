#include "algknot/piecewise_linear.hpp"

#include <algorithm>
#include <cstddef>

#include "algknot/errors.hpp"

namespace algknot {

PiecewiseLinear PiecewiseLinear::from_breakpoints(std::vector<Breakpoint> pts) {
  if (pts.size() < 2)
    throw InvalidInput(Errc::MalformedText, "need at least two breakpoints");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].t <= pts[i - 1].t)
      throw InvalidInput(Errc::NotIncreasing, "breakpoint t-coordinates must increase");

  // Collapse interior points where the slope does not change.
  std::vector<Breakpoint> keep;
  keep.reserve(pts.size());
  keep.push_back(std::move(pts.front()));
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Rat left = (pts[i].v - keep.back().v) / (pts[i].t - keep.back().t);
    const Rat right = (pts[i + 1].v - pts[i].v) / (pts[i + 1].t - pts[i].t);
    if (left != right) keep.push_back(std::move(pts[i]));
  }
  keep.push_back(std::move(pts.back()));

  PiecewiseLinear f;
  f.pts_ = std::move(keep);
  return f;
}

PiecewiseLinear PiecewiseLinear::upper_envelope(std::vector<AffineLine> lines,
                                                const Rat& lo, const Rat& hi) {
  internal_check(!lines.empty() && lo < hi, "envelope needs lines and a real interval");
  std::sort(lines.begin(), lines.end(), [](const AffineLine& a, const AffineLine& b) {
    return a.slope != b.slope ? a.slope < b.slope : a.intercept < b.intercept;
  });
  // Equal slopes: only the largest intercept can contribute.
  std::vector<AffineLine> pruned;
  pruned.reserve(lines.size());
  for (auto& l : lines) {
    if (!pruned.empty() && pruned.back().slope == l.slope) pruned.back() = l;
    else pruned.push_back(l);
  }

  // Convex-hull sweep: middle line b is dominated when the a/c intersection
  // lies at or left of the a/b intersection.
  std::vector<AffineLine> hull;
  auto dominated = [](const AffineLine& a, const AffineLine& b, const AffineLine& c) {
    return (a.intercept - c.intercept) * (b.slope - a.slope) <=
           (a.intercept - b.intercept) * (c.slope - a.slope);
  };
  for (const auto& l : pruned) {
    while (hull.size() >= 2 && dominated(hull[hull.size() - 2], hull.back(), l))
      hull.pop_back();
    hull.push_back(l);
  }

  auto eval = [](const AffineLine& l, const Rat& t) {
    return Rat(l.slope) * t + Rat(l.intercept);
  };
  auto cross = [](const AffineLine& a, const AffineLine& b) {
    return Rat(a.intercept - b.intercept, b.slope - a.slope);
  };

  std::vector<Breakpoint> pts;
  std::size_t j = 0;
  while (j + 1 < hull.size() && cross(hull[j], hull[j + 1]) <= lo) ++j;
  pts.push_back({lo, eval(hull[j], lo)});
  for (; j + 1 < hull.size(); ++j) {
    const Rat x = cross(hull[j], hull[j + 1]);
    if (x >= hi) break;
    pts.push_back({x, eval(hull[j], x)});
  }
  pts.push_back({hi, eval(hull[j], hi)});
  return from_breakpoints(std::move(pts));
}

Rat PiecewiseLinear::evaluate(const Rat& t) const {
  if (t < domain_min() || t > domain_max())
    throw InvalidInput(Errc::OutOfDomain,
                       to_fraction_string(t) + " outside [" +
                           to_fraction_string(domain_min()) + ", " +
                           to_fraction_string(domain_max()) + "]");
  auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                             [](const Rat& x, const Breakpoint& p) { return x < p.t; });
  if (it == pts_.end()) return pts_.back().v;
  const Breakpoint& right = *it;
  const Breakpoint& left = *(it - 1);
  return left.v + (right.v - left.v) * (t - left.t) / (right.t - left.t);
}

Rat PiecewiseLinear::segment_slope(std::size_t i) const {
  return (pts_[i + 1].v - pts_[i].v) / (pts_[i + 1].t - pts_[i].t);
}

bool PiecewiseLinear::is_convex() const {
  for (std::size_t i = 1; i < segment_count(); ++i)
    if (segment_slope(i) < segment_slope(i - 1)) return false;
  return true;
}

PiecewiseLinear PiecewiseLinear::extend_symmetric() const {
  internal_check(domain_min() == 0 && domain_max() == 1,
                 "symmetric extension expects domain [0,1]");
  std::vector<Breakpoint> pts = pts_;
  for (std::size_t i = pts_.size() - 1; i-- > 0;)
    pts.push_back({Rat(2) - pts_[i].t, pts_[i].v});
  return from_breakpoints(std::move(pts));
}

nlohmann::json PiecewiseLinear::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts_)
    arr.push_back({{"t", to_fraction_string(p.t)}, {"v", to_fraction_string(p.v)}});
  return arr;
}

PiecewiseLinear subtract(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  internal_check(a.domain_min() == b.domain_min() && a.domain_max() == b.domain_max(),
                 "subtract expects matching domains");
  std::vector<Rat> ts;
  for (const auto& p : a.breakpoints()) ts.push_back(p.t);
  for (const auto& p : b.breakpoints()) ts.push_back(p.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Breakpoint> pts;
  pts.reserve(ts.size());
  for (const auto& t : ts) pts.push_back({t, a.evaluate(t) - b.evaluate(t)});
  return PiecewiseLinear::from_breakpoints(std::move(pts));
}

}  // namespace algknot
