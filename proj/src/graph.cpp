#include "hopspan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace hopspan {

namespace {

int kind_group(const GeomObject& o) {
  if (std::holds_alternative<Interval>(o)) return 0;
  if (std::holds_alternative<UnitDiskCenter>(o)) return 1;
  return 2;
}

// Adjacency-list BFS from s truncated at depth t; fills dist (-1 = unseen)
// and returns the visited vertices so the caller can reset them.
std::vector<int> bounded_bfs(const std::vector<std::vector<int>>& adj, int s,
                             int t, std::vector<int>& dist) {
  std::vector<int> seen{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    const int u = seen[head];
    if (dist[u] == t) continue;
    for (int w : adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        seen.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

IntersectionGraph IntersectionGraph::from_edges(int n,
                                                const std::vector<Edge>& edges) {
  IntersectionGraph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("bad edge in from_edges");
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    g.m_ += a.size();
  }
  g.m_ /= 2;
  return g;
}

bool IntersectionGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> IntersectionGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

IntersectionGraph build_intersection_graph(std::vector<GeomObject> objects) {
  IntersectionGraph g;
  const int n = static_cast<int>(objects.size());
  if (n > 0) {
    const int k = kind_group(objects[0]);
    for (const auto& o : objects) {
      if (kind_group(o) != k) {
        throw UnsupportedPredicate("unsupported predicate: mixed object kinds");
      }
    }
  }
  std::vector<AxisRect> box(objects.size());
  for (int i = 0; i < n; ++i) box[i] = bounding_box(objects[i]);
  std::vector<int> order(objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return box[a].x_lo < box[b].x_lo || (box[a].x_lo == box[b].x_lo && a < b);
  });
  g.adj_.assign(objects.size(), {});
  // Sweep in x; boxes are padded by kEps so tolerance-based predicates are
  // never skipped.
  for (std::size_t ii = 0; ii < order.size(); ++ii) {
    const int a = order[ii];
    for (std::size_t jj = ii + 1; jj < order.size(); ++jj) {
      const int b = order[jj];
      if (box[b].x_lo > box[a].x_hi + 2 * kEps) break;
      if (box[b].y_lo > box[a].y_hi + 2 * kEps ||
          box[a].y_lo > box[b].y_hi + 2 * kEps) {
        continue;
      }
      if (intersects(objects[a], objects[b])) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
      }
    }
  }
  for (auto& l : g.adj_) {
    std::sort(l.begin(), l.end());
    g.m_ += l.size();
  }
  g.m_ /= 2;
  g.objects_ = std::move(objects);
  return g;
}

std::unordered_map<std::string, std::size_t> Spanner::provenance_counts() const {
  std::unordered_map<std::string, std::size_t> out;
  for (const auto& p : provenance) ++out[p];
  return out;
}

bool SpannerBuilder::add(int u, int v, const std::string& label) {
  if (u == v) return false;
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("spanner edge endpoint out of range");
  }
  auto [it, fresh] = index_.emplace(key(u, v), edges_.size());
  if (!fresh) return false;
  edges_.push_back(make_edge(u, v));
  labels_.push_back(label);
  return true;
}

bool SpannerBuilder::contains(int u, int v) const {
  return index_.count(key(u, v)) > 0;
}

Spanner SpannerBuilder::build(int t) const {
  Spanner s;
  s.n = n_;
  s.t = t;
  std::vector<std::size_t> idx(edges_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
  for (std::size_t i : idx) {
    s.edges.push_back(edges_[i]);
    s.provenance.push_back(labels_[i]);
  }
  return s;
}

VerificationReport verify_hop_spanner(const IntersectionGraph& g,
                                      const Spanner& h, int t) {
  if (h.n != g.n()) throw NotSubgraph("not a subgraph: vertex counts differ");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : h.edges) {
    if (!g.has_edge(u, v)) {
      throw NotSubgraph("not a subgraph: edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") missing from G");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  VerificationReport rep;
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  for (int u = 0; u < g.n(); ++u) {
    bool any = false;
    for (int v : g.neighbors(u)) any = any || v > u;
    if (!any) continue;
    const std::vector<int> seen = bounded_bfs(adj, u, t, dist);
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if (dist[v] < 0) {
        rep.violating_edges.push_back({u, v});
        rep.max_observed_stretch = t + 1;
      } else {
        rep.max_observed_stretch = std::max(rep.max_observed_stretch, dist[v]);
      }
    }
    for (int w : seen) dist[w] = -1;
  }
  rep.valid = rep.violating_edges.empty();
  return rep;
}

Spanner greedy_spanner(const IntersectionGraph& g, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  SpannerBuilder b(g.n());
  for (auto [u, v] : g.edges()) {
    const std::vector<int> seen = bounded_bfs(adj, u, t, dist);
    const bool reached = dist[v] >= 0;
    for (int w : seen) dist[w] = -1;
    if (!reached) {
      b.add(u, v, "greedy");
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  return b.build(t);
}

Spanner as_spanner(const IntersectionGraph& g) {
  Spanner s;
  s.n = g.n();
  s.t = 1;
  s.edges = g.edges();
  s.provenance.assign(s.edges.size(), "graph");
  return s;
}

}  // namespace hopspan
