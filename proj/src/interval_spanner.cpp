#include "hopspan/interval_spanner.hpp"

#include <algorithm>
#include <numeric>

namespace hopspan {

std::vector<int> IntervalPartition::intervals_hit(const Interval& s) const {
  std::vector<int> out;
  const int m = static_cast<int>(covers.size());
  // First k >= 1 with p_k >= s.lo.
  auto it = std::lower_bound(breakpoints.begin() + 1, breakpoints.end(), s.lo);
  for (int k = static_cast<int>(it - breakpoints.begin()); k <= m; ++k) {
    const bool right_ok = s.lo <= breakpoints[k];
    const bool left_ok = k == 1 ? s.hi >= breakpoints[0]
                                : s.hi > breakpoints[k - 1];
    if (!left_ok) break;
    if (right_ok) out.push_back(k);
  }
  return out;
}

std::vector<IntervalPartition> greedy_partition(std::span<const Interval> segs) {
  const int n = static_cast<int>(segs.size());
  std::vector<int> order(segs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return segs[a].lo < segs[b].lo || (segs[a].lo == segs[b].lo && a < b);
  });

  std::vector<IntervalPartition> parts;
  int i = 0;
  while (i < n) {
    // Component: maximal run of the lo-sorted order with overlapping reach.
    int j = i;
    double reach = segs[order[i]].hi;
    while (j + 1 < n && segs[order[j + 1]].lo <= reach) {
      ++j;
      reach = std::max(reach, segs[order[j]].hi);
    }
    IntervalPartition part;
    for (int q = i; q <= j; ++q) part.segments.push_back(order[q]);
    std::sort(part.segments.begin(), part.segments.end());

    const double p0 = segs[order[i]].lo;
    part.breakpoints.push_back(p0);
    int ptr = i;
    int best = -1;
    auto better = [&](int a, int b) {
      return b < 0 || segs[a].hi > segs[b].hi ||
             (segs[a].hi == segs[b].hi && a < b);
    };
    while (part.breakpoints.back() < reach) {
      const double prev = part.breakpoints.back();
      while (ptr <= j && segs[order[ptr]].lo <= prev) {
        if (better(order[ptr], best)) best = order[ptr];
        ++ptr;
      }
      part.breakpoints.push_back(segs[best].hi);
      part.covers.push_back(best);
    }
    if (part.covers.empty()) {
      // Every segment is the single point p0; one interval [p0, p0].
      part.breakpoints.push_back(p0);
      part.covers.push_back(part.segments.front());
    }
    parts.push_back(std::move(part));
    i = j + 1;
  }
  return parts;
}

std::vector<Edge> interval_star_edges(std::span<const Interval> segs) {
  std::vector<Edge> out;
  for (const IntervalPartition& part : greedy_partition(segs)) {
    if (part.segments.size() < 2) continue;
    const bool point_component = part.breakpoints.front() == part.breakpoints.back();
    for (int s : part.segments) {
      if (point_component) {
        if (s != part.covers[0]) out.push_back({part.covers[0], s});
        continue;
      }
      for (int k : part.intervals_hit(segs[s])) {
        const int c = part.covers[k - 1];
        if (c != s) out.push_back({c, s});
      }
    }
  }
  return out;
}

Spanner interval_2hop(std::span<const Interval> segs) {
  SpannerBuilder b(static_cast<int>(segs.size()));
  for (auto [c, s] : interval_star_edges(segs)) b.add(c, s, "interval-star");
  return b.build(2);
}

Interval project_to_line(const AxisRect& r, const AxisLine& line) {
  if (line.horizontal) {
    if (!(r.y_lo <= line.value && line.value <= r.y_hi)) {
      throw GeometryError("rectangle misses the line");
    }
    return {r.x_lo, r.x_hi};
  }
  if (!(r.x_lo <= line.value && line.value <= r.x_hi)) {
    throw GeometryError("rectangle misses the line");
  }
  return {r.y_lo, r.y_hi};
}

Spanner line_restricted_2hop(std::span<const AxisRect> rects,
                             const AxisLine& line) {
  std::vector<Interval> proj;
  proj.reserve(rects.size());
  for (const AxisRect& r : rects) proj.push_back(project_to_line(r, line));
  SpannerBuilder b(static_cast<int>(rects.size()));
  for (auto [c, s] : interval_star_edges(proj)) b.add(c, s, "line-star");
  return b.build(2);
}

}  // namespace hopspan
