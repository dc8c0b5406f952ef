#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hopspan/graph.hpp"
#include "hopspan/slab_tree.hpp"

namespace hopspan {

/// One vertical strip (lo, hi] x [b, t] of a node, closed on the left when
/// it is the first strip of its component.
struct ExtendedInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_lo = false;
  int cover = -1;  ///< index of the covering across rectangle
};

struct ExtendedIntervals {
  double b = 0.0;
  double t = 0.0;
  std::vector<ExtendedInterval> items;  ///< left to right, disjoint

  /// Items whose x-range meets [x_lo, x_hi].
  std::vector<int> hit(double x_lo, double x_hi) const;
  /// Item containing abscissa x, if any.
  std::optional<int> locate(double x) const;
};

ExtendedIntervals extended_intervals(const SlabNode& node,
                                     std::span<const AxisRect> rects);

/// How inside rectangles are attached to the covering rectangles.
enum class InsideRule {
  kOverlap,  ///< one edge per strip the rectangle meets (fat rectangles)
  kCorners,  ///< one edge per strip holding a corner (arbitrary rectangles)
};

struct NodeEdges {
  std::vector<Edge> bottom;  ///< interval stars along b
  std::vector<Edge> top;     ///< interval stars along t
  std::vector<Edge> across;  ///< stars of the covering rectangles
  std::vector<Edge> inside;  ///< inside rectangle -> covering rectangle
  /// Max over inside rectangles of the number of strips they get edges to.
  std::size_t max_inside_links = 0;

  /// |H(P)| after removing duplicates across the four parts.
  std::size_t distinct() const;
};

NodeEdges rect_node_spanner(const SlabNode& node,
                            std::span<const AxisRect> rects, InsideRule rule);

struct NodeAudit {
  int node = 0;
  std::size_t members = 0;
  std::size_t inside = 0;
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::size_t across = 0;
  std::size_t edges = 0;
  std::size_t max_inside_links = 0;
  std::size_t strips = 0;
  /// Every 2k contiguous strips span at least k times the narrowest across
  /// rectangle.
  bool width_ok = true;
};

struct RectSpannerReport {
  Spanner spanner;
  SlabTree tree;
  std::vector<NodeAudit> nodes;
  /// Largest fatness (diagonal over shorter side) among the rectangles.
  double alpha = 1.0;
};

/// Fatness ratio of a rectangle: circumradius over inradius.
double rect_fatness(const AxisRect& r);

RectSpannerReport fat_rect_2hop_report(std::span<const AxisRect> rects);
Spanner fat_rect_2hop(std::span<const AxisRect> rects);

enum class IntersectionKind { kNone, kCorner, kCrossing };

IntersectionKind classify_intersection(const AxisRect& a, const AxisRect& b);

/// Slab recursion with the corner rule; every corner edge of G is within two
/// hops, and the result is a subgraph of G.
RectSpannerReport corner_2hop_report(std::span<const AxisRect> rects);
Spanner corner_2hop(std::span<const AxisRect> rects);

/// A streak [start, start + 2^log_len) of compressed coordinates.
struct Streak {
  int start = 0;
  int log_len = 0;
  int end() const { return start + (1 << log_len) - 1; }
  auto operator<=>(const Streak&) const = default;
};

struct Grid {
  Streak x;
  Streak y;
  std::vector<int> a;  ///< traverse the grid horizontally
  std::vector<int> b;  ///< traverse the grid vertically
};

struct BicliqueCover {
  int levels = 0;  ///< log2 of the padded coordinate range
  std::vector<Grid> grids;

  std::size_t weight() const;
  /// Per rectangle: number of grids it belongs to (A or B side).
  std::vector<int> memberships(int n) const;
};

/// Order-preserving ranks of interval endpoints in [0, 2n); ties broken by
/// (value, lo before hi, index).
struct CompressedRect {
  int x_lo, x_hi, y_lo, y_hi;
};
std::vector<CompressedRect> compress(std::span<const AxisRect> rects);

/// Largest streak containing s that stays within [lo, hi].
Streak maximal_streak(int s, int lo, int hi, int levels);

BicliqueCover crossing_biclique_cover(std::span<const AxisRect> rects);

/// Two stars at the lowest indices of A and B; |A| + |B| - 1 edges when the
/// sides are disjoint.
std::vector<Edge> bistar(std::span<const int> a, std::span<const int> b);

Spanner rect_3hop(std::span<const AxisRect> rects);

}  // namespace hopspan
