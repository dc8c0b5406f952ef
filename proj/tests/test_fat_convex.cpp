#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hopspan/fat_convex_spanner.hpp"

using namespace hopspan;

namespace {

using Poly = ConvexPolygon;

Poly box(double x0, double x1, double y0, double y1) {
  return Poly::from_rect(make_rect(x0, x1, y0, y1));
}

IntersectionGraph graph_of(const std::vector<Poly>& p) {
  std::vector<GeomObject> o(p.begin(), p.end());
  return build_intersection_graph(o);
}

SlabNode manual_node(double b, double t, const std::vector<Poly>& p) {
  std::vector<AxisRect> boxes;
  for (const Poly& q : p) boxes.push_back(q.bounding_box());
  SlabNode node;
  node.b = b;
  node.t = t;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) node.members.push_back(i);
  node.classes = classify(b, t, node.members, boxes);
  return node;
}

std::vector<Poly> random_gons(std::mt19937& rng, int n, int k) {
  std::uniform_real_distribution<double> u(0, 1);
  const double side = std::sqrt(static_cast<double>(n)) * 1.6;
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i) {
    const double r = 0.4 + u(rng) * 1.2;
    out.push_back(Poly::regular(k, r, {u(rng) * side, u(rng) * side},
                                u(rng) * 2 * std::numbers::pi));
  }
  return out;
}

// Across bodies a1 = [0,3], a2 = [1,4] and a slanted a3 that meets a1 only
// near the bottom line; inside body s meets a2 but neither center.
std::vector<Poly> neighbour_instance() {
  return {box(0, 3, -1, 5), box(1, 4, -1, 5),
          Poly({{2.5, -1}, {6, -1}, {6, 5}, {5, 5}}), box(3.5, 3.9, 3, 3.5)};
}

}  // namespace

TEST(RankOrder, Examples) {
  const std::vector<Poly> one = {box(0, 1, -1, 2)};
  const SlabView v1(0, 1, one);
  EXPECT_EQ(rank_order(v1, std::vector<int>{0}), (std::vector<int>{0}));

  const std::vector<Poly> two = {box(1, 2, -1, 2), box(0, 2, -1, 2)};
  const SlabView v2(0, 1, two);
  EXPECT_EQ(rank_order(v2, std::vector<int>{0, 1}), (std::vector<int>{1, 0}));

  const std::vector<Poly> tie = {box(0, 2, -1, 2), box(0, 1, -1, 2)};
  const SlabView v3(0, 1, tie);
  EXPECT_EQ(rank_order(v3, std::vector<int>{1, 0}), (std::vector<int>{0, 1}));
}

TEST(GreedyCenters, Chain) {
  std::vector<Poly> p;
  for (int i = 0; i < 4; ++i) p.push_back(box(2 * i, 2 * i + 2.5, -1, 5));
  const SlabView v(0, 4, p);
  const auto ranked = rank_order(v, std::vector<int>{0, 1, 2, 3});
  const CenterSets cs = greedy_centers(v, ranked);
  EXPECT_EQ(cs.c, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(cs.c_prime, (std::vector<int>{0, 1, 2}));
}

TEST(GreedyCenters, Clique) {
  std::vector<Poly> p;
  for (int i = 0; i < 5; ++i) p.push_back(box(0.3 * i, 0.3 * i + 2, -1, 5));
  const SlabView v(0, 4, p);
  const CenterSets cs = greedy_centers(v, rank_order(v, std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(cs.c, (std::vector<int>{0, 4}));
  EXPECT_EQ(cs.c_prime, (std::vector<int>{0}));
}

TEST(GreedyCenters, Single) {
  const std::vector<Poly> p = {box(0, 1, -1, 5)};
  const SlabView v(0, 4, p);
  const CenterSets cs = greedy_centers(v, std::vector<int>{0});
  EXPECT_EQ(cs.c, (std::vector<int>{0}));
  EXPECT_TRUE(cs.c_prime.empty());
}

TEST(AcrossComponents, SplitsDisjointGroups) {
  const std::vector<Poly> p = {box(0, 1, -1, 5), box(0.5, 2, -1, 5), box(5, 6, -1, 5)};
  const SlabView v(0, 4, p);
  const auto comps = across_components(v, rank_order(v, std::vector<int>{0, 1, 2}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<int>{2}));
}

TEST(SlabView, OffLinePredicates) {
  // Meet only along the bottom line, then only strictly inside.
  const std::vector<Poly> p = {box(0, 2, -1, 0), box(1, 3, 0, 2), box(1.5, 2.5, 1, 3)};
  const SlabView v(0, 4, p);
  EXPECT_TRUE(v.meet(0, 1));
  EXPECT_FALSE(v.meet_off_bottom(0, 1));
  EXPECT_TRUE(v.meet_off_bottom(1, 2));
  EXPECT_TRUE(v.meet_off_top(1, 2));
  EXPECT_FALSE(v.meet(0, 2));
}

TEST(FatNode, AcrossEmptyOnlyLineStars) {
  const std::vector<Poly> p = {box(0, 2, -1, 1), box(1, 3, -1, 1), box(0, 1, 1, 2)};
  const FatNodeResult r = fat_node_spanner(manual_node(0, 4, p), p);
  EXPECT_EQ(r.bottom, (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(r.stars.empty());
  EXPECT_TRUE(r.augmented.empty());
}

TEST(FatNode, InsideMeetsCenter) {
  const std::vector<Poly> p = {box(0, 3, -1, 5), box(1, 2, 1, 2)};
  const FatNodeResult r = fat_node_spanner(manual_node(0, 4, p), p);
  EXPECT_EQ(r.augmented, (std::vector<Edge>{{0, 1}}));
}

TEST(FatNode, InsideReachesCenterThroughNeighbour) {
  const auto p = neighbour_instance();
  const SlabNode node = manual_node(0, 4, p);
  ASSERT_EQ(node.classes.across, (std::vector<int>{0, 1, 2}));
  ASSERT_EQ(node.classes.inside, (std::vector<int>{3}));
  const FatNodeResult r = fat_node_spanner(node, p);
  ASSERT_EQ(r.centers.size(), 1u);
  EXPECT_EQ(r.centers[0].c, (std::vector<int>{0, 2}));
  EXPECT_EQ(r.centers[0].c_prime, (std::vector<int>{0}));
  EXPECT_EQ(r.stars, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(r.augmented, (std::vector<Edge>{{1, 3}}));
}

TEST(FatConvex, SmallExamples) {
  const std::vector<Poly> one = {Poly::regular(8, 1)};
  EXPECT_EQ(fat_convex_3hop(one).size(), 0u);

  std::vector<Poly> three;
  for (int i = 0; i < 3; ++i) {
    const double a = 2 * std::numbers::pi * i / 3;
    three.push_back(Poly::regular(32, 1, {0.5 * std::cos(a), 0.5 * std::sin(a)}));
  }
  const Spanner s = fat_convex_3hop(three);
  EXPECT_LE(s.size(), 3u);
  EXPECT_TRUE(verify_hop_spanner(graph_of(three), s, 3).valid);
}

TEST(FatConvex, RepresentativesLieInBothBodies) {
  std::mt19937 rng(2);
  const auto p = random_gons(rng, 80, 6);
  const IntersectionGraph g = graph_of(p);
  const auto reps = body_representatives(p);
  ASSERT_EQ(reps.size(), g.num_edges());
  std::size_t i = 0;
  for (auto [u, v] : g.edges()) {
    EXPECT_TRUE(p[u].contains(reps[i], 1e-7));
    EXPECT_TRUE(p[v].contains(reps[i], 1e-7));
    ++i;
  }
}

TEST(FatConvex, RandomGonsThreeHopAndLemmas) {
  std::mt19937 rng(4);
  for (int k : {6, 12}) {
    for (int n : {60, 400}) {
      const auto p = random_gons(rng, n, k);
      FatOptions opt;
      opt.audit = true;
      opt.check_betweenness = n <= 60;
      const FatSpannerReport rep = fat_convex_3hop_report(p, opt);
      EXPECT_LE(rep.alpha, 1.2);
      const auto v = verify_hop_spanner(graph_of(p), rep.spanner, 3);
      EXPECT_TRUE(v.valid) << "k=" << k << " n=" << n << ": "
                           << v.violating_edges.size() << " violations";
      for (const FatNodeCheck& c : rep.checks) {
        EXPECT_TRUE(c.coverage_ok) << "node " << c.node;
        EXPECT_TRUE(c.adjacent_ok) << "node " << c.node;
        EXPECT_TRUE(c.four_class_ok) << "node " << c.node;
        EXPECT_TRUE(c.across_3hop_ok) << "node " << c.node;
        EXPECT_TRUE(c.betweenness_ok) << "node " << c.node;
        EXPECT_LE(c.max_c_incidence, 3);
        EXPECT_LE(c.max_c_prime_incidence, 3);
        EXPECT_GE(c.min_inscribed_ratio, 1.0 / 8);
      }
    }
  }
}

TEST(FatConvex, StretchedBodiesStayValid) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Poly> p;
  for (int i = 0; i < 150; ++i) {
    const double th = u(rng) * std::numbers::pi;
    const double sx = 1 + u(rng) * 1.5;
    const double m[4] = {sx * std::cos(th), -std::sin(th), sx * std::sin(th), std::cos(th)};
    p.push_back(Poly::regular(7, 0.6, {}, u(rng)).transformed(m).translated(
        {u(rng) * 18, u(rng) * 18}));
  }
  FatOptions opt;
  opt.audit = true;
  const FatSpannerReport rep = fat_convex_3hop_report(p, opt);
  EXPECT_TRUE(verify_hop_spanner(graph_of(p), rep.spanner, 3).valid);
  for (const FatNodeCheck& c : rep.checks) {
    EXPECT_TRUE(c.coverage_ok);
    EXPECT_LE(c.max_c_incidence, 3);
    EXPECT_LE(c.max_c_prime_incidence, 3);
  }
}
