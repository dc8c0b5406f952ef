#include <gtest/gtest.h>

#include <cmath>
#include <queue>
#include <random>

#include "hopspan/rect_spanner.hpp"

using namespace hopspan;

namespace {

IntersectionGraph graph_of(const std::vector<AxisRect>& r) {
  std::vector<GeomObject> o(r.begin(), r.end());
  return build_intersection_graph(o);
}

// Hop distance from u to v in the spanner, capped at `limit + 1`.
int hops(const Spanner& s, int u, int v, int limit) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(s.n));
  for (auto [a, b] : s.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[u] = 0;
  q.push(u);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == v) return d[x];
    if (d[x] == limit) continue;
    for (int y : adj[x]) {
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push(y);
      }
    }
  }
  return limit + 1;
}

std::vector<AxisRect> random_squares(std::mt19937& rng, int n, double region) {
  std::uniform_real_distribution<double> u(0, region);
  std::vector<AxisRect> r;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng), y = u(rng);
    r.push_back(make_rect(x, x + 1, y, y + 1));
  }
  return r;
}

std::vector<AxisRect> random_mixed(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(0, 1);
  const double side = std::sqrt(static_cast<double>(n)) * 1.5;
  std::vector<AxisRect> r;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng) * side, y = u(rng) * side;
    const double w = std::exp(u(rng) * 4 - 2), h = std::exp(u(rng) * 4 - 2);
    r.push_back(make_rect(x, x + w, y, y + h));
  }
  return r;
}

SlabNode manual_node(double b, double t, const std::vector<AxisRect>& r) {
  SlabNode node;
  node.b = b;
  node.t = t;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) node.members.push_back(i);
  node.classes = classify(b, t, node.members, r);
  return node;
}

}  // namespace

TEST(RectNode, AcrossEmptyGivesLineStarsOnly) {
  const std::vector<AxisRect> r = {make_rect(0, 2, -1, 1), make_rect(1, 3, -1, 1),
                                   make_rect(0, 1, 1, 2)};
  const NodeEdges e = rect_node_spanner(manual_node(0, 4, r), r, InsideRule::kOverlap);
  EXPECT_TRUE(e.across.empty());
  EXPECT_TRUE(e.inside.empty());
  EXPECT_EQ(e.bottom, (std::vector<Edge>{{0, 1}}));
}

TEST(RectNode, SingleCoverGivesStar) {
  std::vector<AxisRect> r = {make_rect(0, 10, -1, 5)};
  const int k = 6;
  for (int i = 0; i < k; ++i) r.push_back(make_rect(i, i + 0.5, 1, 2));
  const SlabNode node = manual_node(0, 4, r);
  const ExtendedIntervals ext = extended_intervals(node, r);
  ASSERT_EQ(ext.items.size(), 1u);
  EXPECT_EQ(ext.items[0].cover, 0);
  const NodeEdges e = rect_node_spanner(node, r, InsideRule::kOverlap);
  ASSERT_EQ(e.inside.size(), static_cast<std::size_t>(k));
  for (auto [s, c] : e.inside) EXPECT_EQ(c, 0);
}

TEST(FatRect, SmallExamples) {
  std::vector<AxisRect> disjoint;
  for (int i = 0; i < 5; ++i) disjoint.push_back(make_rect(2 * i, 2 * i + 1, 0, 1));
  EXPECT_EQ(fat_rect_2hop(disjoint).size(), 0u);

  const std::vector<AxisRect> pair = {make_rect(0, 1, 0, 1), make_rect(0.5, 1.5, 0.5, 1.5)};
  const Spanner s = fat_rect_2hop(pair);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(verify_hop_spanner(graph_of(pair), s, 2).valid);
}

TEST(FatRect, RandomSquaresTwoHopAndNodeLemmas) {
  std::mt19937 rng(3);
  for (int n : {200, 2000}) {
    const auto r = random_squares(rng, n, std::sqrt(n / 5.0));
    const RectSpannerReport rep = fat_rect_2hop_report(r);
    const auto v = verify_hop_spanner(graph_of(r), rep.spanner, 2);
    EXPECT_TRUE(v.valid) << v.violating_edges.size() << " violations";
    const double a2 = rep.alpha * rep.alpha;
    EXPECT_NEAR(a2, 2.0, 1e-9);
    for (const NodeAudit& a : rep.nodes) {
      EXPECT_TRUE(a.width_ok) << "node " << a.node;
      EXPECT_LE(static_cast<double>(a.max_inside_links), 2 * a2 + 1 + 1e-9);
      EXPECT_LE(static_cast<double>(a.edges),
                2.0 * (a.bottom + a.top + a.across) + (2 * a2 + 1) * a.inside);
    }
  }
}

TEST(FatRect, SkewedAspectStillValid) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<AxisRect> r;
  for (int i = 0; i < 400; ++i) {
    const double x = u(rng) * 12, y = u(rng) * 12, w = 0.5 + u(rng);
    r.push_back(make_rect(x, x + w, y, y + w * (0.5 + u(rng))));
  }
  const RectSpannerReport rep = fat_rect_2hop_report(r);
  EXPECT_TRUE(verify_hop_spanner(graph_of(r), rep.spanner, 2).valid);
  for (const NodeAudit& a : rep.nodes) {
    EXPECT_TRUE(a.width_ok);
    EXPECT_LE(static_cast<double>(a.max_inside_links),
              2 * rep.alpha * rep.alpha + 1 + 1e-9);
  }
}

TEST(ClassifyIntersection, Examples) {
  EXPECT_EQ(classify_intersection(make_rect(0, 3, 1, 2), make_rect(1, 2, 0, 3)),
            IntersectionKind::kCrossing);
  EXPECT_EQ(classify_intersection(make_rect(0, 2, 0, 2), make_rect(1, 3, 1, 3)),
            IntersectionKind::kCorner);
  EXPECT_EQ(classify_intersection(make_rect(0, 1, 0, 1), make_rect(0, 1, 0, 1)),
            IntersectionKind::kCorner);
  EXPECT_EQ(classify_intersection(make_rect(0, 1, 0, 1), make_rect(2, 3, 0, 1)),
            IntersectionKind::kNone);
  // Shared boundary only: a corner lies on the other's edge.
  EXPECT_EQ(classify_intersection(make_rect(0, 1, 0, 1), make_rect(1, 2, 0.5, 3)),
            IntersectionKind::kCorner);
}

TEST(Corner, PairIsCovered) {
  const std::vector<AxisRect> r = {make_rect(0, 2, 0, 2), make_rect(1, 3, 1, 3)};
  const Spanner s = corner_2hop(r);
  EXPECT_LE(hops(s, 0, 1, 2), 2);
}

TEST(Corner, InsideCornersInTwoStrips) {
  // Two across rectangles split the slab into strips (0, 4] and (4, 8];
  // the inside rectangle has its left corners in one and right corners in
  // the other. Strips span the slab's full height, so corners sharing an
  // x-coordinate always share a strip.
  const std::vector<AxisRect> r = {make_rect(0, 4, -1, 5), make_rect(3, 8, -1, 5),
                                   make_rect(2, 6, 1, 2)};
  const SlabNode node = manual_node(0, 4, r);
  const NodeEdges e = rect_node_spanner(node, r, InsideRule::kCorners);
  EXPECT_EQ(e.max_inside_links, 2u);
  EXPECT_EQ(e.inside, (std::vector<Edge>{{2, 0}, {2, 1}}));
}

TEST(Corner, PlusSignsHaveNoCornerEdges) {
  std::vector<AxisRect> r;
  for (int i = 0; i < 4; ++i) {
    const double c = 10.0 * i;
    r.push_back(make_rect(c, c + 3, 1, 2));
    r.push_back(make_rect(c + 1, c + 2, 0, 3));
  }
  for (auto [u, v] : graph_of(r).edges()) {
    EXPECT_EQ(classify_intersection(r[u], r[v]), IntersectionKind::kCrossing);
  }
}

TEST(Corner, EveryCornerEdgeWithinTwoHops) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const auto r = random_mixed(rng, 150);
    const IntersectionGraph g = graph_of(r);
    const Spanner s = corner_2hop(r);
    for (auto [u, v] : s.edges) EXPECT_TRUE(g.has_edge(u, v));
    std::size_t corner = 0, crossing = 0;
    for (auto [u, v] : g.edges()) {
      const auto k = classify_intersection(r[u], r[v]);
      ASSERT_NE(k, IntersectionKind::kNone);
      if (k == IntersectionKind::kCorner) {
        ++corner;
        EXPECT_LE(hops(s, u, v, 2), 2) << u << "-" << v;
      } else {
        ++crossing;
      }
    }
    EXPECT_EQ(corner + crossing, g.num_edges());
  }
}

TEST(Biclique, SinglePair) {
  const std::vector<AxisRect> r = {make_rect(0, 3, 1, 2), make_rect(1, 2, 0, 3)};
  const BicliqueCover c = crossing_biclique_cover(r);
  ASSERT_EQ(c.grids.size(), 1u);
  EXPECT_EQ(c.weight(), 2u);
  EXPECT_EQ(c.grids[0].a, (std::vector<int>{0}));
  EXPECT_EQ(c.grids[0].b, (std::vector<int>{1}));
}

TEST(Biclique, NoCrossingGivesEmptyCover) {
  const std::vector<AxisRect> r = {make_rect(0, 2, 0, 2), make_rect(1, 3, 1, 3),
                                   make_rect(5, 6, 5, 6)};
  EXPECT_TRUE(crossing_biclique_cover(r).grids.empty());
}

TEST(Biclique, MaximalStreak) {
  EXPECT_EQ(maximal_streak(4, 0, 7, 3), (Streak{0, 3}));
  EXPECT_EQ(maximal_streak(5, 5, 5, 3), (Streak{5, 0}));
  EXPECT_EQ(maximal_streak(6, 4, 7, 3), (Streak{4, 2}));
  EXPECT_EQ(maximal_streak(6, 5, 7, 3), (Streak{6, 1}));
}

void check_cover(const std::vector<AxisRect>& r) {
  const int n = static_cast<int>(r.size());
  const BicliqueCover c = crossing_biclique_cover(r);
  const IntersectionGraph g = graph_of(r);
  for (const Grid& gr : c.grids) {
    for (int a : gr.a) {
      for (int b : gr.b) {
        ASSERT_TRUE(g.has_edge(a, b)) << a << "-" << b;
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    if (classify_intersection(r[u], r[v]) != IntersectionKind::kCrossing) continue;
    bool found = false;
    for (const Grid& gr : c.grids) {
      auto in = [](const std::vector<int>& s, int x) {
        return std::binary_search(s.begin(), s.end(), x);
      };
      found = found || (in(gr.a, u) && in(gr.b, v)) || (in(gr.a, v) && in(gr.b, u));
    }
    EXPECT_TRUE(found) << u << "-" << v;
  }
  const int L = c.levels;
  for (int m : c.memberships(n)) EXPECT_LT(m, 4 * L * L);
}

TEST(Biclique, GridGadgetExhaustive) {
  for (int k : {1, 3, 8, 13}) {
    std::vector<AxisRect> r;
    for (int i = 0; i < k; ++i) r.push_back(make_rect(0, k + 1, i + 0.25, i + 0.75));
    for (int j = 0; j < k; ++j) r.push_back(make_rect(j + 0.25, j + 0.75, -1, k + 1));
    check_cover(r);
  }
}

TEST(Biclique, RandomMixedCoverage) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) check_cover(random_mixed(rng, 120));
}

TEST(Bistar, SmallCases) {
  EXPECT_EQ(bistar(std::vector<int>{0}, std::vector<int>{1}).size(), 1u);
  EXPECT_EQ(bistar(std::vector<int>{0, 1}, std::vector<int>{2, 3, 4}).size(), 4u);
  EXPECT_EQ(bistar(std::vector<int>{0, 1, 2}, std::vector<int>{3, 4, 5}).size(), 5u);
  EXPECT_THROW(bistar(std::vector<int>{}, std::vector<int>{1}), std::invalid_argument);
}

TEST(Bistar, CompleteBipartiteUpToTwelve) {
  for (int s = 1; s <= 12; ++s) {
    for (int t = 1; t <= 12; ++t) {
      std::vector<int> a, b;
      std::vector<Edge> all;
      for (int i = 0; i < s; ++i) a.push_back(i);
      for (int j = 0; j < t; ++j) b.push_back(s + j);
      for (int i : a) {
        for (int j : b) all.push_back({i, j});
      }
      const auto edges = bistar(a, b);
      ASSERT_EQ(edges.size(), static_cast<std::size_t>(s + t - 1));
      const IntersectionGraph g = IntersectionGraph::from_edges(s + t, all);
      Spanner sp;
      sp.n = s + t;
      sp.t = 3;
      sp.edges = edges;
      sp.provenance.assign(edges.size(), "bistar");
      EXPECT_TRUE(verify_hop_spanner(g, sp, 3).valid);
    }
  }
}

TEST(Rect3Hop, CrossingStrips) {
  const int k = 10;
  std::vector<AxisRect> r;
  for (int i = 0; i < k; ++i) r.push_back(make_rect(0, k + 1, i + 0.25, i + 0.75));
  for (int j = 0; j < k; ++j) r.push_back(make_rect(j + 0.25, j + 0.75, -1, k + 1));
  const Spanner s = rect_3hop(r);
  EXPECT_TRUE(verify_hop_spanner(graph_of(r), s, 3).valid);
  EXPECT_LT(s.size(), static_cast<std::size_t>(k * k));
}

TEST(Rect3Hop, DisjointAndRandom) {
  std::vector<AxisRect> disjoint;
  for (int i = 0; i < 6; ++i) disjoint.push_back(make_rect(2 * i, 2 * i + 1, 0, 1));
  EXPECT_EQ(rect_3hop(disjoint).size(), 0u);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const auto r = random_mixed(rng, 300);
    const auto v = verify_hop_spanner(graph_of(r), rect_3hop(r), 3);
    EXPECT_TRUE(v.valid) << v.violating_edges.size() << " violations";
  }
}
