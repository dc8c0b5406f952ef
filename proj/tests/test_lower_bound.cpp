#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hopspan/lower_bound.hpp"

using namespace hopspan;

namespace {

// Clique-union edge set straight from the group definition.
std::set<Edge> clique_union(int h) {
  const LevelGraph f{h, {}};
  std::set<Edge> e;
  for (int i = 0; i <= h; ++i) {
    for (int k = 0; k < (1 << i); ++k) {
      std::vector<int> g;
      for (int v = 0; v < f.n(); ++v) {
        if (f.in_group(v, k, i)) g.push_back(v);
      }
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) e.insert(make_edge(g[a], g[b]));
      }
    }
  }
  return e;
}

// A / B halves of V_{k,i} per the definition.
std::set<Edge> bichromatic_by_definition(const LevelGraph& f, int k, int i) {
  std::set<Edge> out;
  for (auto [u, v] : f.edges) {
    auto side = [&](int w) {
      if (!f.in_group(w, k, i)) return -1;
      return (f.column(w) >> (f.h - i - 1)) - 2 * k;
    };
    const int su = side(u), sv = side(v);
    if (su >= 0 && sv >= 0 && su != sv) out.insert({u, v});
  }
  return out;
}

IntersectionGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return IntersectionGraph::from_edges(n, e);
}

}  // namespace

TEST(GenF, SmallCases) {
  EXPECT_EQ(gen_F(0).n(), 1);
  EXPECT_TRUE(gen_F(0).edges.empty());
  const LevelGraph f1 = gen_F(1);
  EXPECT_EQ(f1.n(), 4);
  EXPECT_EQ(f1.edges.size(), 3u);
  // A path: degrees 1, 2, 2, 1.
  std::vector<int> deg(4, 0);
  for (auto [u, v] : f1.edges) ++deg[u], ++deg[v];
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(gen_F(2).n(), 12);
  EXPECT_EQ(gen_F(2).edges.size(), 24u);
  EXPECT_THROW(gen_F(13), std::invalid_argument);
  EXPECT_THROW(gen_F(-1), std::invalid_argument);
}

TEST(GenF, MatchesCliqueUnion) {
  for (int h = 0; h <= 6; ++h) {
    const LevelGraph f = gen_F(h);
    EXPECT_EQ(f.n(), (1 << h) * (h + 1));
    const std::set<Edge> ref = clique_union(h);
    EXPECT_EQ(std::vector<Edge>(ref.begin(), ref.end()), f.edges) << "h=" << h;
  }
}

TEST(GenF, BichromaticClassesAreDisjoint) {
  for (int h = 1; h <= 4; ++h) {
    const LevelGraph f = gen_F(h);
    std::vector<std::set<Edge>> classes;
    for (int i = 0; i < h; ++i) {
      for (int k = 0; k < (1 << i); ++k) {
        const auto s = bichromatic_by_definition(f, k, i);
        for (const Edge& e : s) {
          EXPECT_EQ(bichromatic_class(f, e.first, e.second), std::make_pair(k, i));
        }
        classes.push_back(s);
      }
    }
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        for (const Edge& e : classes[a]) EXPECT_FALSE(classes[b].count(e));
      }
    }
  }
}

TEST(MinSpanner, Examples) {
  EXPECT_EQ(min_2hop_bruteforce(path(3)).value, 2);
  const IntersectionGraph tri = IntersectionGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(min_2hop_bruteforce(tri).value, 2);
  const MinSpannerResult f1 = min_2hop_bruteforce(gen_F(1).graph());
  EXPECT_EQ(f1.value, 3);
  EXPECT_TRUE(f1.complete);
}

TEST(MinSpanner, F2AgreesAcrossBranchOrders) {
  const IntersectionGraph g = gen_F(2).graph();
  const MinSpannerResult a = min_2hop_bruteforce(g, BranchOrder::kCoverageDegree);
  const MinSpannerResult b = min_2hop_bruteforce(g, BranchOrder::kReverse);
  ASSERT_TRUE(a.complete);
  ASSERT_TRUE(b.complete);
  EXPECT_EQ(a.value, b.value);
  Spanner s{g.n(), 2, a.edges, std::vector<std::string>(a.edges.size(), "min")};
  EXPECT_TRUE(verify_hop_spanner(g, s, 2).valid);
  EXPECT_EQ(static_cast<int>(a.edges.size()), a.value);
}

TEST(MinSpanner, RandomSmallGraphsMatchSubsetEnumeration) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if (rng() % 2) e.push_back({u, v});
      }
    }
    if (e.size() > 12) e.resize(12);
    const IntersectionGraph g = IntersectionGraph::from_edges(6, e);
    int best = static_cast<int>(e.size());
    for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
      Spanner s{6, 2, {}, {}};
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (mask >> i & 1) {
          s.edges.push_back(e[i]);
          s.provenance.push_back("x");
        }
      }
      if (static_cast<int>(s.edges.size()) < best && verify_hop_spanner(g, s, 2).valid) {
        best = static_cast<int>(s.edges.size());
      }
    }
    EXPECT_EQ(min_2hop_bruteforce(g).value, best) << "trial " << trial;
  }
}

TEST(ForcedAudit, FloorsHoldForValidSpanners) {
  for (int h : {2, 4, 5}) {
    const LevelGraph f = gen_F(h);
    const IntersectionGraph g = f.graph();
    for (const Spanner& s : {as_spanner(g), greedy_spanner(g, 2)}) {
      const auto audit = forced_edge_audit(f, s);
      EXPECT_FALSE(audit.empty());
      for (const ForcedCount& c : audit) {
        EXPECT_TRUE(c.ok()) << "h=" << h << " k=" << c.k << " i=" << c.i << " count=" << c.count;
      }
    }
  }
  EXPECT_EQ(audit_window(2), 1);
  EXPECT_EQ(audit_window(4), 2);
  EXPECT_EQ(audit_window(5), 3);
}

TEST(ForcedAudit, RejectsInvalidSpanner) {
  const LevelGraph f = gen_F(2);
  Spanner s{f.n(), 2, {}, {}};
  EXPECT_THROW(forced_edge_audit(f, s), std::invalid_argument);
}

TEST(Realize, SingleSquare) {
  const HomothetRealization r = realize_F(0, ConvexPolygon::from_rect(make_rect(0, 1, 0, 1)));
  ASSERT_EQ(r.placements.size(), 1u);
  EXPECT_EQ(r.base.bounding_box().y_lo, 0);
}

TEST(Realize, MatchesFForSeveralBodies) {
  const std::vector<std::pair<ConvexPolygon, int>> cases = {
      {ConvexPolygon::from_rect(make_rect(0, 1, 0, 1)), 4},
      {ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}), 4},
      {ConvexPolygon::regular(16, 1), 4},
      {ConvexPolygon::regular(64, 1), 3},
  };
  for (const auto& [c, h] : cases) {
    const HomothetRealization r = realize_F(h, c);
    ASSERT_EQ(static_cast<int>(r.placements.size()), (1 << h) * (h + 1));
    const LevelGraph f = gen_F(h);
    EXPECT_EQ(realization_graph(r).edges(), f.edges);
    for (int v = 0; v < f.n(); ++v) {
      const Placement& p = r.placements[v];
      EXPECT_EQ(p.x, f.column(v));
      EXPECT_EQ(p.level, f.level(v));
      EXPECT_EQ(p.dy, 0.0);
      // Tangent to the axis at the column's point only.
      EXPECT_EQ(r.body(v).bounding_box().y_lo, 0.0);
      EXPECT_EQ(p.dx, r.placements[f.id(p.x, 0)].dx);
    }
  }
}
