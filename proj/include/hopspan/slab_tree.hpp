#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hopspan/geometry.hpp"

namespace hopspan {

struct SlabClasses {
  std::vector<int> inside;  ///< contained in the open slab
  std::vector<int> bottom;  ///< meets the bottom line
  std::vector<int> top;     ///< meets the top line
  std::vector<int> across;  ///< meets both lines
};

/// Classifies `members` (indices into `boxes`) against the slab b <= y <= t.
/// Objects that meet the closed slab only through a line are still bottom
/// or top; objects missing the slab entirely are dropped.
SlabClasses classify(double b, double t, std::span<const int> members,
                     std::span<const AxisRect> boxes);

struct SlabNode {
  int id = 0;
  int level = 0;
  int parent = -1;
  double b = 0.0;
  double t = 0.0;
  std::vector<int> members;  ///< ascending
  SlabClasses classes;
  std::optional<double> split;
  int child_lo = -1;  ///< slab [b, split]
  int child_hi = -1;  ///< slab [split, t]

  bool is_leaf() const { return !split.has_value(); }
};

class SlabTree {
 public:
  const std::vector<SlabNode>& nodes() const { return nodes_; }
  const SlabNode& root() const { return nodes_.front(); }
  const SlabNode& node(int id) const { return nodes_[id]; }
  int depth() const;
  /// Sum over nodes of |S(P)|.
  std::size_t total_membership() const;
  /// Split lines of all internal nodes.
  std::vector<double> split_lines() const;
  /// Leaf slabs as (b, t) pairs.
  std::vector<std::pair<double, double>> leaf_slabs() const;

 private:
  friend SlabTree build_slab_tree(std::span<const AxisRect>,
                                  std::vector<Point2>);
  std::vector<SlabNode> nodes_;
};

/// Lowest-then-leftmost corner of a ∩ b for every intersecting pair.
std::vector<Point2> rect_representatives(std::span<const AxisRect> boxes);

/// Tree with rectangle-pair representatives.
SlabTree build_slab_tree(std::span<const AxisRect> boxes);
/// Tree over the objects' bounding boxes with caller-supplied
/// representative points (one per intersecting pair).
SlabTree build_slab_tree(std::span<const AxisRect> boxes,
                         std::vector<Point2> reps);

struct LevelAudit {
  std::size_t violations = 0;
  int max_inside = 0;
  int max_bottom_only = 0;
  int max_top_only = 0;
  int max_across = 0;
};

/// Per object and per level: how many nodes hold it as inside, bottom-only,
/// top-only and across. The limits are 1, 1, 1 and 2; `violations` counts
/// (object, level, class) triples above the limit.
LevelAudit audit_levels(const SlabTree& tree);

}  // namespace hopspan
