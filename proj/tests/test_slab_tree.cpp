#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hopspan/slab_tree.hpp"

using namespace hopspan;

namespace {

std::vector<AxisRect> random_rects(std::mt19937& rng, int n, double side) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<AxisRect> r;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng) * side, y = u(rng) * side;
    const double w = 0.2 + 2 * u(rng), h = 0.2 + 2 * u(rng);
    r.push_back(make_rect(x, x + w, y, y + h));
  }
  return r;
}

}  // namespace

TEST(SlabTree, SingleRectangleIsLeaf) {
  const std::vector<AxisRect> r = {make_rect(0, 1, 0, 1)};
  const SlabTree t = build_slab_tree(r);
  ASSERT_EQ(t.nodes().size(), 1u);
  EXPECT_TRUE(t.root().is_leaf());
  EXPECT_EQ(t.root().classes.inside, (std::vector<int>{0}));
}

TEST(SlabTree, DisjointPairIsLeaf) {
  const std::vector<AxisRect> r = {make_rect(0, 1, 0, 1), make_rect(2, 3, 2, 3)};
  EXPECT_TRUE(build_slab_tree(r).root().is_leaf());
}

TEST(SlabTree, OverlappingPairSplitsAtRepresentative) {
  const std::vector<AxisRect> r = {make_rect(0, 2, 1, 3), make_rect(1, 3, 0, 2)};
  const auto reps = rect_representatives(r);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0], (Point2{1, 1}));

  const SlabTree t = build_slab_tree(r);
  ASSERT_TRUE(t.root().split.has_value());
  EXPECT_DOUBLE_EQ(*t.root().split, 1.0);
  ASSERT_EQ(t.nodes().size(), 3u);
  const SlabNode& lo = t.node(t.root().child_lo);
  const SlabNode& hi = t.node(t.root().child_hi);
  EXPECT_TRUE(lo.is_leaf());
  EXPECT_TRUE(hi.is_leaf());
  EXPECT_EQ(lo.t, 1.0);
  EXPECT_EQ(hi.b, 1.0);
  // Both touch the split line from their own side.
  EXPECT_EQ(lo.classes.top, (std::vector<int>{0, 1}));
  EXPECT_EQ(hi.classes.bottom, (std::vector<int>{0, 1}));
}

TEST(Classify, Examples) {
  const std::vector<AxisRect> r = {
      make_rect(0, 1, -1, 5),   // across
      make_rect(0, 1, 1, 2),    // inside
      make_rect(0, 1, -1, 1),   // bottom only
      make_rect(0, 1, 3, 7),    // top only
      make_rect(0, 1, 8, 9),    // outside
      make_rect(0, 1, -1, 0),   // touches b from below
  };
  const std::vector<int> all = {0, 1, 2, 3, 4, 5};
  const SlabClasses c = classify(0, 4, all, r);
  EXPECT_EQ(c.across, (std::vector<int>{0}));
  EXPECT_EQ(c.inside, (std::vector<int>{1}));
  EXPECT_EQ(c.bottom, (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(c.top, (std::vector<int>{0, 3}));
}

TEST(SlabTree, StructuralInvariantsOnRandomInstances) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 20 + trial * 10;
    const auto rects = random_rects(rng, n, std::sqrt(static_cast<double>(n)) * 2);
    const auto reps = rect_representatives(rects);
    const SlabTree tree = build_slab_tree(rects);

    for (const SlabNode& node : tree.nodes()) {
      const auto& c = node.classes;
      ASSERT_LT(node.b, node.t);
      std::vector<int> both;
      std::set_intersection(c.bottom.begin(), c.bottom.end(), c.top.begin(),
                            c.top.end(), std::back_inserter(both));
      EXPECT_EQ(both, c.across);
      // Every member is in exactly one of inside / bottom / top.
      for (int i : node.members) {
        const int k = std::count(c.inside.begin(), c.inside.end(), i) +
                      (std::count(c.bottom.begin(), c.bottom.end(), i) ||
                       std::count(c.top.begin(), c.top.end(), i));
        EXPECT_EQ(k, 1);
      }
      if (!node.is_leaf()) {
        for (int child : {node.child_lo, node.child_hi}) {
          for (int i : tree.node(child).members) {
            EXPECT_FALSE(std::binary_search(c.across.begin(), c.across.end(), i));
          }
        }
      }
    }

    const auto lines = tree.split_lines();
    for (const Point2& p : reps) {
      const bool on_line = std::find(lines.begin(), lines.end(), p.y) != lines.end();
      bool in_leaf_interior = false;
      for (auto [b, t] : tree.leaf_slabs()) {
        in_leaf_interior = in_leaf_interior || (b < p.y && p.y < t);
      }
      EXPECT_TRUE(on_line || !in_leaf_interior);
    }

    const LevelAudit a = audit_levels(tree);
    EXPECT_EQ(a.violations, 0u);
    EXPECT_LE(a.max_inside, 1);
    EXPECT_LE(a.max_bottom_only, 1);
    EXPECT_LE(a.max_top_only, 1);
    EXPECT_LE(a.max_across, 2);

    // Depth is logarithmic in the number of representatives.
    const double m = std::max<double>(2.0, static_cast<double>(reps.size()));
    EXPECT_LE(tree.depth(), static_cast<int>(std::ceil(std::log2(m))) + 1);
  }
}

TEST(SlabTree, MembershipGrowsLikeNLogN) {
  std::mt19937 rng(11);
  for (int n : {200, 800}) {
    const auto rects = random_rects(rng, n, std::sqrt(static_cast<double>(n)) * 2);
    const SlabTree tree = build_slab_tree(rects);
    const double c = static_cast<double>(tree.total_membership()) /
                     (n * std::log2(static_cast<double>(n)));
    RecordProperty("membership_constant_" + std::to_string(n), std::to_string(c));
    EXPECT_LT(c, 4.0);
  }
}
