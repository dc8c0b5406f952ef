#pragma once

#include <span>
#include <vector>

#include "hopspan/geometry.hpp"
#include "hopspan/graph.hpp"

namespace hopspan {

/// Greedy partition of one connected component of a segment set.
/// Interval k (1-based) is (breakpoints[k-1], breakpoints[k]]; the first one
/// also owns the singleton {breakpoints[0]}.
struct IntervalPartition {
  std::vector<double> breakpoints;
  /// covers[k-1] is the covering segment of interval k.
  std::vector<int> covers;
  /// Segment indices of the component, ascending.
  std::vector<int> segments;

  std::size_t num_intervals() const { return covers.size(); }
  /// 1-based indices of the intervals that segment s meets.
  std::vector<int> intervals_hit(const Interval& s) const;
};

std::vector<IntervalPartition> greedy_partition(std::span<const Interval> segs);

/// Star edges (center, member) over local indices; the same edges
/// interval_2hop emits, without provenance.
std::vector<Edge> interval_star_edges(std::span<const Interval> segs);

Spanner interval_2hop(std::span<const Interval> segs);

struct AxisLine {
  bool horizontal = true;
  double value = 0.0;
};

/// Projection of a rectangle onto the line; throws if it misses the line.
Interval project_to_line(const AxisRect& r, const AxisLine& line);

Spanner line_restricted_2hop(std::span<const AxisRect> rects,
                             const AxisLine& line);

}  // namespace hopspan
