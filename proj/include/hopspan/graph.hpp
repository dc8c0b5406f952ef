#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopspan/geometry.hpp"

namespace hopspan {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class NotSubgraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  /// Graph without geometry, e.g. the abstract lower-bound family.
  static IntersectionGraph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  const std::vector<GeomObject>& objects() const { return objects_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  std::size_t num_edges() const { return m_; }
  /// All edges (u < v), lexicographic.
  std::vector<Edge> edges() const;

 private:
  friend IntersectionGraph build_intersection_graph(std::vector<GeomObject>);
  std::vector<GeomObject> objects_;
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

/// Exact closed-set intersection graph. Throws UnsupportedPredicate when the
/// list mixes object kinds that have no pairwise predicate.
IntersectionGraph build_intersection_graph(std::vector<GeomObject> objects);

struct Spanner {
  int n = 0;
  int t = 1;
  std::vector<Edge> edges;
  /// One label per edge, parallel to `edges`.
  std::vector<std::string> provenance;

  std::size_t size() const { return edges.size(); }
  /// Edge count per provenance label.
  std::unordered_map<std::string, std::size_t> provenance_counts() const;
};

// Accumulates edges from sub-constructions. A duplicate edge keeps the label
// of its first insertion.
class SpannerBuilder {
 public:
  explicit SpannerBuilder(int n) : n_(n) {}

  /// Returns true if the edge was new. Self-loops are ignored.
  bool add(int u, int v, const std::string& label);
  bool contains(int u, int v) const;
  std::size_t size() const { return edges_.size(); }
  Spanner build(int t) const;

 private:
  static std::uint64_t key(int u, int v) {
    const Edge e = make_edge(u, v);
    return (static_cast<std::uint64_t>(e.first) << 32) |
           static_cast<std::uint32_t>(e.second);
  }
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Edge> violating_edges;
  /// Largest d_H(u, v) over edges uv of G; t + 1 stands for "more than t".
  int max_observed_stretch = 0;
};

/// Checks d_H(u, v) <= t for every edge uv of G. Throws NotSubgraph if H has
/// an edge missing from G or a different vertex count.
VerificationReport verify_hop_spanner(const IntersectionGraph& g,
                                      const Spanner& h, int t);

/// Greedy baseline: scan edges lexicographically, keep uv iff d_H(u,v) > t.
Spanner greedy_spanner(const IntersectionGraph& g, int t);

/// The whole graph as a 1-hop spanner.
Spanner as_spanner(const IntersectionGraph& g);

}  // namespace hopspan
