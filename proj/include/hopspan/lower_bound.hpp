#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/graph.hpp"

namespace hopspan {

/// The level graph F(h): vertices (x, level), x < 2^h, level <= h, numbered
/// x-major; V_{k,i} = X_{k,i} x {0..i} is a clique for every k, i.
struct LevelGraph {
  int h = 0;
  std::vector<Edge> edges;  ///< sorted, unique

  int columns() const { return 1 << h; }
  int n() const { return columns() * (h + 1); }
  int id(int x, int level) const { return x * (h + 1) + level; }
  int column(int v) const { return v / (h + 1); }
  int level(int v) const { return v % (h + 1); }
  /// (x, level) ∈ V_{k,i}.
  bool in_group(int v, int k, int i) const {
    return i >= level(v) && (column(v) >> (h - i)) == k;
  }
  IntersectionGraph graph() const { return IntersectionGraph::from_edges(n(), edges); }
};

/// Throws std::invalid_argument if h < 0 or 2^h (h+1) > 10^5.
LevelGraph gen_F(int h);

struct Placement {
  double scale = 1.0;
  double dx = 0.0;
  double dy = 0.0;
  int x = 0;
  int level = 0;
};

/// Homothets scale * base + (dx, dy), one per vertex of F(h) in vertex order.
/// The base is rotated and translated so that its lowest point is a vertex at
/// the origin and the x-axis meets it only there.
struct HomothetRealization {
  int h = 0;
  ConvexPolygon base;
  std::vector<Placement> placements;
  std::vector<double> epsilons;  ///< shift used at each doubling

  ConvexPolygon body(int v) const;
};

class RealizationError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Intersection test with a tolerance relative to the smaller homothet; the
/// realization spans many orders of magnitude in scale.
bool homothets_intersect(const HomothetRealization& r, int u, int v);
IntersectionGraph realization_graph(const HomothetRealization& r);

/// Recursive doubling construction. Throws RealizationError naming the
/// offending pair if the result is not F(h) under the identity labeling.
HomothetRealization realize_F(int h, const ConvexPolygon& c);

struct MinSpannerResult {
  int value = 0;       ///< best size found
  int lower = 0;       ///< proven lower bound
  bool complete = true;
  std::vector<Edge> edges;
};

enum class BranchOrder { kCoverageDegree, kReverse };

/// Exact minimum 2-hop spanner by branch and bound (at most 64 edges). Stops
/// with complete = false after `budget` search nodes.
MinSpannerResult min_2hop_bruteforce(const IntersectionGraph& g,
                                     BranchOrder order = BranchOrder::kCoverageDegree,
                                     std::uint64_t budget = 200'000'000);

struct ForcedCount {
  int k = 0;
  int i = 0;
  int count = 0;
  double floor = 0.0;
  bool ok() const { return count >= floor; }
};

/// ⌈log2 h⌉, at least 1.
int audit_window(int h);
/// The clique (k', i') for which uv is bichromatic; nullopt for same-column
/// edges.
std::optional<std::pair<int, int>> bichromatic_class(const LevelGraph& f, int u, int v);
/// Per (k, i), i <= h - window: spanner edges bichromatic for some clique
/// inside X_{k,i} with level in [i, i + window). Throws std::invalid_argument
/// if s is not a valid 2-hop spanner of F(h).
std::vector<ForcedCount> forced_edge_audit(const LevelGraph& f, const Spanner& s);

}  // namespace hopspan
