#include "hopspan/lower_bound.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hopspan {

LevelGraph gen_F(int h) {
  if (h < 0 || h > 16 || (std::int64_t{1} << h) * (h + 1) > 100000) {
    throw std::invalid_argument("F(h) too large");
  }
  LevelGraph f;
  f.h = h;
  const int cols = f.columns();
  for (int x = 0; x < cols; ++x) {
    for (int l = 0; l <= h; ++l) {
      const int u = f.id(x, l);
      // Neighbours share a block X_{k,j} with j >= both levels.
      const int block = 1 << (h - l);
      const int first = x / block * block;
      for (int y = first; y < first + block; ++y) {
        const int j = h - std::bit_width(static_cast<unsigned>(x ^ y));
        for (int m = 0; m <= j; ++m) {
          const int v = f.id(y, m);
          if (u < v) f.edges.push_back({u, v});
        }
      }
    }
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

// ---------------------------------------------------------------------------

ConvexPolygon HomothetRealization::body(int v) const {
  const Placement& p = placements[v];
  return base.scaled(p.scale).translated({p.dx, p.dy});
}

namespace {

double diameter(const ConvexPolygon& c) {
  double d = 0;
  for (const Point2& a : c.vertices()) {
    for (const Point2& b : c.vertices()) d = std::max(d, dist(a, b));
  }
  return d;
}

double box_gap(const AxisRect& a, const AxisRect& b) {
  const double gx = std::max({0.0, a.x_lo - b.x_hi, b.x_lo - a.x_hi});
  const double gy = std::max({0.0, a.y_lo - b.y_hi, b.y_lo - a.y_hi});
  return std::hypot(gx, gy);
}

double dyadic_floor(double v) { return std::exp2(std::floor(std::log2(v))); }

// Gap between a new homothet and other columns, relative to its diameter.
constexpr double kClearance = 0.03;

// Sharpest vertex at the origin with its normal cone bisected by -y.
ConvexPolygon tangent_base(const ConvexPolygon& c) {
  const auto& v = c.vertices();
  const std::size_t m = v.size();
  std::size_t best = 0;
  double best_cos = 2;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = v[(i + m - 1) % m] - v[i], b = v[(i + 1) % m] - v[i];
    const double cs = dot(a, b) / (norm(a) * norm(b));
    if (best_cos > 1 || cs > best_cos + 1e-12) {
      best_cos = cs;
      best = i;
    }
  }
  const Point2 o = v[best];
  const Point2 a = v[(best + m - 1) % m] - o, b = v[(best + 1) % m] - o;
  const Point2 in = a / norm(a) + b / norm(b);  // into the body
  const double ang = std::atan2(in.y, in.x);
  const double rot = M_PI / 2 - ang;
  const double r[4] = {std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot)};
  const ConvexPolygon out = c.translated(-o).transformed(r);
  for (const Point2& p : out.vertices()) {
    if (!(p == Point2{0, 0}) && !(p.y > 0)) {
      throw GeometryError("base body has no strictly extremal vertex");
    }
  }
  return out;
}

// Pair geometry in the frame of the smaller homothet: its tangency point at
// the origin and its scale 1. Scales are powers of two and tangency points are
// dyadic, so the change of frame is exact.
struct LocalPair {
  ConvexPolygon small, big;
  double unit = 1.0;  // absolute length of one local unit
  double gap = 0.0;   // bounding-box gap, local units
};

class Homothets {
 public:
  explicit Homothets(const ConvexPolygon& base)
      : base_(base), box_(base.bounding_box()), d0_(diameter(base)) {}

  double diam() const { return d0_; }
  const ConvexPolygon& base() const { return base_; }

  LocalPair local(const Placement& a, const Placement& b) const {
    const bool a_small = a.scale <= b.scale;
    const Placement& s = a_small ? a : b;
    const Placement& g = a_small ? b : a;
    const double k = g.scale / s.scale;
    const Point2 d{(g.dx - s.dx) / s.scale, (g.dy - s.dy) / s.scale};
    LocalPair p;
    p.unit = s.scale;
    const AxisRect gb = make_rect(k * box_.x_lo + d.x, k * box_.x_hi + d.x, k * box_.y_lo + d.y,
                                  k * box_.y_hi + d.y);
    p.gap = box_gap(box_, gb);
    p.small = base_;
    if (p.gap == 0.0 || p.gap < 4 * d0_) p.big = base_.scaled(k).translated(d);
    return p;
  }

  /// Local-unit distance, or +inf-like gap when the boxes are far apart.
  double distance(const LocalPair& p) const {
    if (p.big.size() == 0) return p.gap;
    return convex_distance(p.small, p.big);
  }

  bool meet(const Placement& a, const Placement& b) const {
    const LocalPair p = local(a, b);
    if (p.gap > kTol * d0_) return false;
    return distance(p) <= kTol * d0_;
  }

  static constexpr double kTol = 1e-7;

 private:
  ConvexPolygon base_;
  AxisRect box_;
  double d0_;
};

}  // namespace

bool homothets_intersect(const HomothetRealization& r, int u, int v) {
  return Homothets(r.base).meet(r.placements[u], r.placements[v]);
}

IntersectionGraph realization_graph(const HomothetRealization& r) {
  const Homothets hs(r.base);
  const int n = static_cast<int>(r.placements.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (hs.meet(r.placements[u], r.placements[v])) e.push_back({u, v});
    }
  }
  return IntersectionGraph::from_edges(n, e);
}

HomothetRealization realize_F(int h, const ConvexPolygon& c) {
  const LevelGraph target = gen_F(h);
  HomothetRealization r;
  r.h = 0;
  r.base = tangent_base(c);
  const Homothets hs(r.base);
  const double d0 = hs.diam();
  const double w0 = penetration_depth(r.base, r.base);
  r.placements.push_back({1.0, 0.0, 0.0, 0, 0});
  std::vector<double> p = {0.0};

  for (int level = 1; level <= h; ++level) {
    const auto& cur = r.placements;
    const int m = static_cast<int>(cur.size());
    // Largest shift keeping every overlap and every gap.
    double margin = 1e300;
    for (int u = 0; u < m; ++u) margin = std::min(margin, w0 * cur[u].scale);
    for (int u = 0; u < m; ++u) {
      for (int v = u + 1; v < m; ++v) {
        const LocalPair lp = hs.local(cur[u], cur[v]);
        if (lp.gap * lp.unit >= margin) continue;
        const double d = hs.distance(lp);
        margin = std::min(margin, lp.unit * (d > 0 ? d : penetration_depth(lp.small, lp.big)));
      }
    }
    if (!(margin > 0)) throw RealizationError("zero margin at level " + std::to_string(level));
    const double eps = dyadic_floor(margin / 4);
    r.epsilons.push_back(eps);

    std::vector<Placement> next;
    for (const Placement& q : cur) {
      next.push_back({q.scale, q.dx, q.dy, 2 * q.x, q.level});
      next.push_back({q.scale, q.dx + eps, q.dy, 2 * q.x + 1, q.level});
    }
    std::vector<double> np;
    for (double pa : p) {
      np.push_back(pa);
      np.push_back(pa + eps);
    }
    r.h = level;
    r.placements = next;
    const int nm = static_cast<int>(next.size());
    // A small copy at each tangency point, clear of the other columns.
    for (int col = 0; col < static_cast<int>(np.size()); ++col) {
      double smallest = 1e300;
      for (const Placement& q : next) {
        if (q.x == col) smallest = std::min(smallest, q.scale);
      }
      double tau = dyadic_floor(smallest / 2);
      bool placed = false;
      for (int tries = 0; tries < 200 && !placed; ++tries, tau /= 2) {
        const Placement ca{tau, np[col], 0.0, col, level};
        placed = true;
        for (int v = 0; v < nm && placed; ++v) {
          if (next[v].x == col) continue;
          const LocalPair lp = hs.local(ca, next[v]);
          // Clearance in units of the new body.
          const double clear = kClearance * d0 * tau / lp.unit;
          if (lp.gap > clear) continue;
          if (hs.distance(lp) <= clear) placed = false;
        }
        if (placed) r.placements.push_back(ca);
      }
      if (!placed) throw RealizationError("no room for a new homothet in column " + std::to_string(col));
    }
    std::sort(r.placements.begin(), r.placements.end(), [&](const Placement& a, const Placement& q) {
      return a.x != q.x ? a.x < q.x : a.level < q.level;
    });
    p = std::move(np);
  }

  const IntersectionGraph g = realization_graph(r);
  const IntersectionGraph f = target.graph();
  for (int u = 0; u < f.n(); ++u) {
    for (int v = u + 1; v < f.n(); ++v) {
      if (f.has_edge(u, v) != g.has_edge(u, v)) {
        throw RealizationError("realization differs from F(" + std::to_string(h) + ") at pair (" +
                               std::to_string(u) + ", " + std::to_string(v) + ")");
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Search {
  int m = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> paths;  // 2-paths covering each edge
  std::vector<std::uint64_t> incident;                   // per vertex
  std::vector<int> order;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
  int best = 0;
  std::uint64_t best_set = 0;

  static bool has(std::uint64_t s, int e) { return (s >> e) & 1; }

  bool covered(int e, std::uint64_t chosen) const {
    if (has(chosen, e)) return true;
    for (auto [a, b] : paths[e]) {
      if (has(chosen, a) && has(chosen, b)) return true;
    }
    return false;
  }
  bool coverable(int e, std::uint64_t excluded) const {
    if (!has(excluded, e)) return true;
    for (auto [a, b] : paths[e]) {
      if (!has(excluded, a) && !has(excluded, b)) return true;
    }
    return false;
  }
  int bound(std::uint64_t chosen) const {
    int needy = 0;
    for (std::uint64_t inc : incident) {
      if (inc != 0 && (inc & chosen) == 0) ++needy;
    }
    return std::popcount(chosen) + (needy + 1) / 2;
  }

  void run(int pos, std::uint64_t chosen, std::uint64_t excluded) {
    if (++nodes > budget) {
      complete = false;
      return;
    }
    if (bound(chosen) >= best) return;
    bool all = true;
    for (int e = 0; e < m && all; ++e) all = covered(e, chosen);
    if (all) {
      best = std::popcount(chosen);
      best_set = chosen;
      return;
    }
    if (pos == m) return;
    const int e = order[pos];
    run(pos + 1, chosen | (std::uint64_t{1} << e), excluded);
    if (!complete) return;
    const std::uint64_t ex = excluded | (std::uint64_t{1} << e);
    for (int f = 0; f < m; ++f) {
      if (!covered(f, chosen) && !coverable(f, ex)) return;
    }
    run(pos + 1, chosen, ex);
  }
};

}  // namespace

MinSpannerResult min_2hop_bruteforce(const IntersectionGraph& g, BranchOrder order,
                                     std::uint64_t budget) {
  Search s;
  s.edges = g.edges();
  s.m = static_cast<int>(s.edges.size());
  if (s.m > 64) throw std::invalid_argument("exhaustive search needs at most 64 edges");
  std::map<Edge, int> index;
  for (int e = 0; e < s.m; ++e) index[s.edges[e]] = e;
  s.paths.resize(s.m);
  s.incident.assign(g.n(), 0);
  for (int e = 0; e < s.m; ++e) {
    auto [u, v] = s.edges[e];
    s.incident[u] |= std::uint64_t{1} << e;
    s.incident[v] |= std::uint64_t{1} << e;
    for (int w : g.neighbors(u)) {
      if (w != v && g.has_edge(w, v)) {
        s.paths[e].push_back({index.at(make_edge(u, w)), index.at(make_edge(w, v))});
      }
    }
  }
  std::vector<int> uses(s.m, 0);
  for (int e = 0; e < s.m; ++e) {
    for (auto [a, b] : s.paths[e]) {
      ++uses[a];
      ++uses[b];
    }
  }
  s.order.resize(s.m);
  for (int e = 0; e < s.m; ++e) s.order[e] = e;
  if (order == BranchOrder::kCoverageDegree) {
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return uses[a] > uses[b]; });
  } else {
    std::reverse(s.order.begin(), s.order.end());
  }
  s.budget = budget;
  s.best = s.m + 1;
  s.best_set = s.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.m) - 1;
  const int root = s.bound(0);
  s.run(0, 0, 0);

  MinSpannerResult r;
  if (s.best > s.m) s.best = s.m;
  r.value = s.best;
  r.complete = s.complete;
  r.lower = s.complete ? s.best : root;
  for (int e = 0; e < s.m; ++e) {
    if (Search::has(s.best_set, e)) r.edges.push_back(s.edges[e]);
  }
  return r;
}

// ---------------------------------------------------------------------------

int audit_window(int h) {
  int w = 0;
  while ((1 << w) < h) ++w;
  return std::max(1, w);
}

std::optional<std::pair<int, int>> bichromatic_class(const LevelGraph& f, int u, int v) {
  const int xu = f.column(u), xv = f.column(v);
  if (xu == xv) return std::nullopt;
  const int i = f.h - std::bit_width(static_cast<unsigned>(xu ^ xv));
  if (std::max(f.level(u), f.level(v)) > i) return std::nullopt;
  return std::make_pair(xu >> (f.h - i), i);
}

std::vector<ForcedCount> forced_edge_audit(const LevelGraph& f, const Spanner& s) {
  if (!verify_hop_spanner(f.graph(), s, 2).valid) {
    throw std::invalid_argument("audit needs a valid 2-hop spanner of F(h)");
  }
  const int w = audit_window(f.h);
  // count[i'][k'] = spanner edges bichromatic for V_{k',i'}.
  std::vector<std::vector<int>> count(f.h + 1);
  for (int i = 0; i <= f.h; ++i) count[i].assign(1 << i, 0);
  for (auto [u, v] : s.edges) {
    if (auto c = bichromatic_class(f, u, v)) ++count[c->second][c->first];
  }
  std::vector<ForcedCount> out;
  for (int i = 0; i <= f.h - w; ++i) {
    for (int k = 0; k < (1 << i); ++k) {
      ForcedCount fc{k, i, 0, std::ldexp(static_cast<double>(i + 1), f.h - i) / 8};
      for (int ip = i; ip < std::min(i + w, f.h); ++ip) {
        const int span = 1 << (ip - i);
        for (int kp = k * span; kp < (k + 1) * span; ++kp) fc.count += count[ip][kp];
      }
      out.push_back(fc);
    }
  }
  return out;
}

}  // namespace hopspan
