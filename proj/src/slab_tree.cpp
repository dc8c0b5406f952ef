#include "hopspan/slab_tree.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "hopspan/graph.hpp"

namespace hopspan {

SlabClasses classify(double b, double t, std::span<const int> members,
                     std::span<const AxisRect> boxes) {
  SlabClasses c;
  for (int i : members) {
    const AxisRect& r = boxes[i];
    if (r.y_hi < b || r.y_lo > t) continue;
    const bool hits_b = r.y_lo <= b && b <= r.y_hi;
    const bool hits_t = r.y_lo <= t && t <= r.y_hi;
    if (hits_b) c.bottom.push_back(i);
    if (hits_t) c.top.push_back(i);
    if (hits_b && hits_t) c.across.push_back(i);
    if (b < r.y_lo && r.y_hi < t) c.inside.push_back(i);
  }
  return c;
}

int SlabTree::depth() const {
  int d = 0;
  for (const SlabNode& n : nodes_) d = std::max(d, n.level);
  return d;
}

std::size_t SlabTree::total_membership() const {
  std::size_t s = 0;
  for (const SlabNode& n : nodes_) s += n.members.size();
  return s;
}

std::vector<double> SlabTree::split_lines() const {
  std::vector<double> out;
  for (const SlabNode& n : nodes_) {
    if (n.split) out.push_back(*n.split);
  }
  return out;
}

std::vector<std::pair<double, double>> SlabTree::leaf_slabs() const {
  std::vector<std::pair<double, double>> out;
  for (const SlabNode& n : nodes_) {
    if (n.is_leaf()) out.push_back({n.b, n.t});
  }
  return out;
}

std::vector<Point2> rect_representatives(std::span<const AxisRect> boxes) {
  std::vector<GeomObject> objs(boxes.begin(), boxes.end());
  const IntersectionGraph g = build_intersection_graph(std::move(objs));
  std::vector<Point2> reps;
  reps.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) {
    reps.push_back({std::max(boxes[u].x_lo, boxes[v].x_lo),
                    std::max(boxes[u].y_lo, boxes[v].y_lo)});
  }
  return reps;
}

SlabTree build_slab_tree(std::span<const AxisRect> boxes) {
  return build_slab_tree(boxes, rect_representatives(boxes));
}

SlabTree build_slab_tree(std::span<const AxisRect> boxes,
                         std::vector<Point2> reps) {
  SlabTree tree;
  double lo = 0.0, hi = 1.0;
  if (!boxes.empty()) {
    lo = boxes[0].y_lo;
    hi = boxes[0].y_hi;
    for (const AxisRect& r : boxes) {
      lo = std::min(lo, r.y_lo);
      hi = std::max(hi, r.y_hi);
    }
  }
  const double pad = 1.0 + 0.01 * (hi - lo);

  struct Pending {
    int id;
    std::vector<double> rep_ys;  // strictly inside the slab
  };
  SlabNode root;
  root.b = lo - pad;
  root.t = hi + pad;
  root.members.resize(boxes.size());
  std::iota(root.members.begin(), root.members.end(), 0);
  std::vector<double> ys;
  ys.reserve(reps.size());
  for (const Point2& p : reps) {
    if (root.b < p.y && p.y < root.t) ys.push_back(p.y);
  }
  tree.nodes_.push_back(std::move(root));

  std::vector<Pending> stack;
  stack.push_back({0, std::move(ys)});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    SlabNode& node = tree.nodes_[cur.id];
    node.classes = classify(node.b, node.t, node.members, boxes);
    if (cur.rep_ys.empty()) continue;

    auto mid = cur.rep_ys.begin() +
               static_cast<std::ptrdiff_t>((cur.rep_ys.size() - 1) / 2);
    std::nth_element(cur.rep_ys.begin(), mid, cur.rep_ys.end());
    const double c = *mid;
    node.split = c;

    std::vector<int> kept;
    std::set_difference(node.members.begin(), node.members.end(),
                        node.classes.across.begin(), node.classes.across.end(),
                        std::back_inserter(kept));
    const double b = node.b, t = node.t;
    const int level = node.level;
    const int parent = node.id;

    std::vector<Pending> made;
    for (int side = 0; side < 2; ++side) {
      SlabNode child;
      child.id = static_cast<int>(tree.nodes_.size());
      child.level = level + 1;
      child.parent = parent;
      child.b = side == 0 ? b : c;
      child.t = side == 0 ? c : t;
      for (int i : kept) {
        if (boxes[i].y_lo <= child.t && boxes[i].y_hi >= child.b) {
          child.members.push_back(i);
        }
      }
      std::vector<double> child_ys;
      for (double y : cur.rep_ys) {
        if (child.b < y && y < child.t) child_ys.push_back(y);
      }
      if (side == 0) {
        tree.nodes_[parent].child_lo = child.id;
      } else {
        tree.nodes_[parent].child_hi = child.id;
      }
      made.push_back({child.id, std::move(child_ys)});
      tree.nodes_.push_back(std::move(child));
    }
    // Low child first in preorder.
    stack.push_back(std::move(made[1]));
    stack.push_back(std::move(made[0]));
  }
  return tree;
}

LevelAudit audit_levels(const SlabTree& tree) {
  LevelAudit a;
  std::map<std::pair<int, int>, std::array<int, 4>> count;  // (level, obj)
  for (const SlabNode& node : tree.nodes()) {
    const auto& c = node.classes;
    for (int i : c.inside) ++count[{node.level, i}][0];
    for (int i : c.across) ++count[{node.level, i}][3];
    // Class lists are ascending, so membership in across is a binary search.
    auto across = [&](int i) {
      return std::binary_search(c.across.begin(), c.across.end(), i);
    };
    for (int i : c.bottom) {
      if (!across(i)) ++count[{node.level, i}][1];
    }
    for (int i : c.top) {
      if (!across(i)) ++count[{node.level, i}][2];
    }
  }
  for (const auto& [key, k] : count) {
    a.max_inside = std::max(a.max_inside, k[0]);
    a.max_bottom_only = std::max(a.max_bottom_only, k[1]);
    a.max_top_only = std::max(a.max_top_only, k[2]);
    a.max_across = std::max(a.max_across, k[3]);
    a.violations += (k[0] > 1) + (k[1] > 1) + (k[2] > 1) + (k[3] > 2);
  }
  return a;
}

}  // namespace hopspan
