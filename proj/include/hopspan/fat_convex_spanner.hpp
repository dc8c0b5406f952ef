#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hopspan/graph.hpp"
#include "hopspan/slab_tree.hpp"

namespace hopspan {

// Bodies seen through one slab: lazily clipped polygons and the
// "intersect in slab" predicate.
class SlabView {
 public:
  SlabView(double b, double t, std::span<const ConvexPolygon> bodies);

  double b() const { return b_; }
  double t() const { return t_; }
  const ConvexPolygon& clipped(int i) const;
  /// a ∩ b ∩ slab is nonempty.
  bool meet(int i, int j) const;
  /// a ∩ b ∩ slab is nonempty but a and b do not meet on the bottom (resp.
  /// top) line. Uses the same slices as the line stars, so every pair is
  /// served by exactly one of the two mechanisms.
  bool meet_off_bottom(int i, int j) const;
  bool meet_off_top(int i, int j) const;
  /// Leftmost x of body ∩ bottom line.
  double min_x_on_bottom(int i) const;

 private:
  bool slices_meet(int i, int j, double y) const;
  double b_, t_;
  std::span<const ConvexPolygon> bodies_;
  mutable std::vector<std::unique_ptr<ConvexPolygon>> clipped_;
};

/// Across bodies ordered by leftmost point on the bottom line, ties by index.
std::vector<int> rank_order(const SlabView& view, std::span<const int> across);

struct CenterSets {
  std::vector<int> c;        ///< c_0 .. c_m
  std::vector<int> c_prime;  ///< c'_0 .. c'_{m-1}
};

/// Greedy centers of one component given in rank order.
CenterSets greedy_centers(const SlabView& view, std::span<const int> by_rank);

/// Components of `ids` under the in-slab intersection relation, each in rank
/// order.
std::vector<std::vector<int>> across_components(const SlabView& view,
                                                std::span<const int> ranked);

struct FatNodeCheck {
  int node = 0;
  std::size_t edges = 0;
  std::size_t members = 0;
  bool coverage_ok = true;    ///< every across body meets a center
  bool adjacent_ok = true;    ///< c'_k meets c_k
  bool four_class_ok = true;  ///< even/odd classes of C and C' disjoint
  bool across_3hop_ok = true; ///< across pairs within 3 hops in the stars
  bool betweenness_ok = true; ///< only evaluated when requested
  int max_c_incidence = 0;
  int max_c_prime_incidence = 0;
  /// min over across bodies of inscribed diameter / (h / alpha).
  double min_inscribed_ratio = 0.0;
  /// Across bodies whose clipped polygon is degenerate (slab too thin).
  int inscribed_skipped = 0;
};

struct FatNodeResult {
  std::vector<Edge> bottom;
  std::vector<Edge> top;
  std::vector<Edge> stars;      ///< H'_in
  std::vector<Edge> augmented;  ///< H_in \ H'_in
  std::vector<CenterSets> centers;
  std::vector<std::vector<int>> components;
};

struct FatOptions {
  /// Evaluate the O(|A|^3) betweenness property per node.
  bool check_betweenness = false;
  /// Run the per-node structural checks at all.
  bool audit = false;
};

FatNodeResult fat_node_spanner(const SlabNode& node,
                               std::span<const ConvexPolygon> bodies);

struct FatSpannerReport {
  Spanner spanner;
  SlabTree tree;
  std::vector<FatNodeCheck> checks;
  double alpha = 1.0;  ///< max fatness over the bodies
};

/// One point of a ∩ b per intersecting pair, on a horizontal line where
/// both bodies' slices overlap.
std::vector<Point2> body_representatives(std::span<const ConvexPolygon> bodies);

FatSpannerReport fat_convex_3hop_report(std::span<const ConvexPolygon> bodies,
                                        const FatOptions& opt = {});
Spanner fat_convex_3hop(std::span<const ConvexPolygon> bodies);

}  // namespace hopspan
