#include <gtest/gtest.h>

#include <random>

#include "hopspan/interval_spanner.hpp"

using namespace hopspan;

namespace {

IntersectionGraph graph_of(const std::vector<Interval>& s) {
  std::vector<GeomObject> o(s.begin(), s.end());
  return build_intersection_graph(o);
}

std::vector<Interval> random_segments(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(0, 1);
  const double span = 1 + u(rng) * n * 0.3;
  const double maxlen = 0.05 + u(rng) * 3;
  std::vector<Interval> s;
  for (int i = 0; i < n; ++i) {
    const double a = u(rng) * span;
    // A few degenerate and duplicated segments exercise the tie rules.
    if (i % 17 == 3) {
      s.push_back({a, a});
    } else if (i % 23 == 5 && !s.empty()) {
      s.push_back(s.back());
    } else {
      s.push_back({a, a + u(rng) * maxlen});
    }
  }
  return s;
}

}  // namespace

TEST(Partition, SingleSegment) {
  const std::vector<Interval> s = {{0, 1}};
  const auto parts = greedy_partition(s);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].breakpoints, (std::vector<double>{0, 1}));
  EXPECT_EQ(parts[0].covers, (std::vector<int>{0}));
}

TEST(Partition, ThreeSegments) {
  const std::vector<Interval> s = {{0, 2}, {1, 4}, {3, 5}};
  const auto parts = greedy_partition(s);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].breakpoints, (std::vector<double>{0, 2, 4, 5}));
  EXPECT_EQ(parts[0].covers, (std::vector<int>{0, 1, 2}));
}

TEST(Partition, TwoComponents) {
  const std::vector<Interval> s = {{0, 1}, {2, 3}};
  const auto parts = greedy_partition(s);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].covers.size(), 1u);
  EXPECT_EQ(parts[1].covers.size(), 1u);
}

TEST(Partition, TieGoesToLowestIndex) {
  const std::vector<Interval> s = {{0.5, 3}, {0, 3}, {0, 3}};
  const auto parts = greedy_partition(s);
  ASSERT_EQ(parts[0].covers.size(), 1u);
  EXPECT_EQ(parts[0].covers[0], 1);
}

TEST(Interval2Hop, SpecExamples) {
  const std::vector<Interval> disjoint = {{0, 1}, {2, 3}, {4, 5}};
  EXPECT_EQ(interval_2hop(disjoint).size(), 0u);

  const std::vector<Interval> three = {{0, 2}, {1, 4}, {3, 5}};
  EXPECT_EQ(interval_2hop(three).edges, (std::vector<Edge>{{0, 1}, {1, 2}}));

  std::vector<Interval> stab;
  for (int i = 0; i < 9; ++i) stab.push_back({0.5 - 0.1 * i, 0.5 + 0.05 * i});
  EXPECT_EQ(interval_2hop(stab).size(), 8u);
}

TEST(Interval2Hop, AllPointSegmentsFormOneStar) {
  const std::vector<Interval> s = {{1, 1}, {1, 1}, {1, 1}};
  const Spanner h = interval_2hop(s);
  EXPECT_EQ(h.edges, (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(Interval2Hop, PartitionProperties) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_segments(rng, 2 + trial % 80);
    for (const auto& part : greedy_partition(s)) {
      for (std::size_t k = 1; k <= part.num_intervals(); ++k) {
        const Interval& c = s[part.covers[k - 1]];
        EXPECT_LE(c.lo, part.breakpoints[k - 1]);
        EXPECT_EQ(c.hi, part.breakpoints[k]);
      }
      for (int i : part.segments) {
        const auto hit = part.intervals_hit(s[i]);
        EXPECT_GE(hit.size(), 1u);
        EXPECT_LE(hit.size(), 2u);
      }
      // Intersecting segments share an interval.
      for (int i : part.segments) {
        for (int j : part.segments) {
          if (i >= j || !(s[i].lo <= s[j].hi && s[j].lo <= s[i].hi)) continue;
          const auto a = part.intervals_hit(s[i]);
          const auto b = part.intervals_hit(s[j]);
          bool common = false;
          for (int x : a)
            for (int y : b) common = common || x == y;
          EXPECT_TRUE(common);
        }
      }
    }
  }
}

TEST(Interval2Hop, RandomInstancesValidAndSparse) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_segments(rng, 1 + trial * 7);
    const Spanner h = interval_2hop(s);
    EXPECT_LE(h.size(), 2 * s.size());
    ASSERT_TRUE(verify_hop_spanner(graph_of(s), h, 2).valid);
  }
}

TEST(LineRestricted, SpecExamples) {
  const AxisLine y0{true, 0.0};
  const std::vector<AxisRect> two = {{0, 2, -1, 1}, {1, 3, -0.5, 2}};
  EXPECT_EQ(line_restricted_2hop(two, y0).size(), 1u);

  const std::vector<AxisRect> three = {{0, 2, -1, 1}, {1, 4, 0, 1}, {3, 5, -2, 0}};
  EXPECT_EQ(line_restricted_2hop(three, y0).edges,
            (std::vector<Edge>{{0, 1}, {1, 2}}));

  const std::vector<AxisRect> apart = {{0, 1, -1, 1}, {2, 3, -1, 1}};
  EXPECT_EQ(line_restricted_2hop(apart, y0).size(), 0u);

  const std::vector<AxisRect> vert = {{-1, 1, 0, 2}, {-2, 0.5, 1, 4}};
  EXPECT_EQ(line_restricted_2hop(vert, AxisLine{false, 0.0}).size(), 1u);
}

TEST(LineRestricted, MissingTheLineThrows) {
  const std::vector<AxisRect> r = {{0, 1, 1, 2}};
  EXPECT_THROW(line_restricted_2hop(r, AxisLine{true, 0.0}), GeometryError);
}
