#include "hopspan/udg_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace hopspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Piecewise-linear chain evaluation; chain sorted by x.
double chain_at(const std::vector<Point2>& c, double t) {
  if (t <= c.front().x) return c.front().y;
  if (t >= c.back().x) return c.back().y;
  auto it = std::upper_bound(c.begin(), c.end(), t,
                             [](double v, const Point2& p) { return v < p.x; });
  const Point2 b = *it;
  const Point2 a = *(it - 1);
  if (b.x == a.x) return std::min(a.y, b.y);
  return a.y + (b.y - a.y) * (t - a.x) / (b.x - a.x);
}

double seg_point_dist(Point2 a, Point2 b, Point2 q) {
  const Point2 d = b - a;
  const double l2 = dot(d, d);
  if (l2 == 0.0) return dist(a, q);
  const double s = std::clamp(dot(q - a, d) / l2, 0.0, 1.0);
  return dist(a + d * s, q);
}

}  // namespace

UnitBall UnitBall::euclidean() { return UnitBall{}; }

UnitBall UnitBall::polygon(const ConvexPolygon& body) {
  if (body.is_degenerate() || body.size() < 3) {
    throw GeometryError("unit ball must have interior");
  }
  UnitBall b;
  b.euclidean_ = false;
  b.body_ = body;
  const auto& v = body.vertices();
  const std::size_t m = v.size();
  double xmin = kInf, xmax = -kInf;
  for (const Point2& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
  }
  b.w_ = 0.5 * (xmax - xmin);
  // CCW: edges running right form the lower chain, edges running left the upper.
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 p = v[i], q = v[(i + 1) % m];
    if (q.x > p.x) {
      b.lower_chain_.push_back(p);
      b.lower_chain_.push_back(q);
    } else if (q.x < p.x) {
      b.upper_chain_.push_back(q);
      b.upper_chain_.push_back(p);
    }
  }
  auto tidy = [](std::vector<Point2>& c, bool low) {
    std::sort(c.begin(), c.end(), [&](const Point2& a, const Point2& q) {
      return a.x != q.x ? a.x < q.x : (low ? a.y < q.y : a.y > q.y);
    });
    c.erase(std::unique(c.begin(), c.end(),
                        [](const Point2& a, const Point2& q) { return a.x == q.x; }),
            c.end());
  };
  tidy(b.lower_chain_, true);
  tidy(b.upper_chain_, false);
  const auto top = std::max_element(b.upper_chain_.begin(), b.upper_chain_.end(),
                                    [](const Point2& a, const Point2& q) { return a.y < q.y; });
  b.upper_peak_ = top->x;
  return b;
}

double UnitBall::lower(double t) const {
  if (euclidean_) {
    if (std::abs(t) > 1.0) return kInf;
    return -std::sqrt(std::max(0.0, 1.0 - t * t));
  }
  if (t < lower_chain_.front().x || t > lower_chain_.back().x) return kInf;
  return chain_at(lower_chain_, t);
}

double UnitBall::upper(double t) const {
  if (euclidean_) {
    if (std::abs(t) > 1.0) return -kInf;
    return std::sqrt(std::max(0.0, 1.0 - t * t));
  }
  if (t < upper_chain_.front().x || t > upper_chain_.back().x) return -kInf;
  return chain_at(upper_chain_, t);
}

std::optional<std::pair<double, double>> UnitBall::below(double h) const {
  if (euclidean_) {
    if (h >= 1.0) return std::nullopt;
    const double r = std::sqrt(1.0 - h * h);
    return std::make_pair(-r, r);
  }
  const auto& c = lower_chain_;
  std::size_t k = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].y < c[k].y) k = i;
  }
  if (!(c[k].y < -h)) return std::nullopt;
  auto root = [&](std::size_t from, int dir) {
    // Walk away from the minimum until the chain rises to -h.
    std::size_t i = from;
    while (true) {
      const long j = static_cast<long>(i) + dir;
      if (j < 0 || j >= static_cast<long>(c.size())) return c[i].x;
      const Point2 a = c[i], b = c[static_cast<std::size_t>(j)];
      if (b.y >= -h) {
        if (b.y == a.y) return a.x;
        return a.x + (b.x - a.x) * (-h - a.y) / (b.y - a.y);
      }
      i = static_cast<std::size_t>(j);
    }
  };
  return std::make_pair(root(k, -1), root(k, +1));
}

bool UnitBall::contains(Point2 v, double tol) const {
  if (euclidean_) return norm(v) <= 1.0 + tol;
  return body_.contains(v / (1.0 + tol), 0.0);
}

bool UnitBall::meets_segment(Point2 a, Point2 b, double tol) const {
  if (euclidean_) return seg_point_dist(a, b, {0, 0}) <= 1.0 + tol;
  const double s = 1.0 + tol;
  const ConvexPolygon seg =
      a == b ? ConvexPolygon::degenerate({a / s}) : ConvexPolygon::degenerate({a / s, b / s});
  return polygons_intersect(seg, body_);
}

UnitBall UnitBall::mirrored() const {
  if (euclidean_) return *this;
  std::vector<Point2> v;
  for (auto it = body_.vertices().rbegin(); it != body_.vertices().rend(); ++it) {
    v.push_back({it->x, -it->y});
  }
  return polygon(ConvexPolygon(std::move(v)));
}

// ---------------------------------------------------------------------------

namespace {

struct Envelope {
  const std::vector<Point2>& pts;
  const UnitBall& ball;

  double f(int i, double x) const { return pts[i].y + ball.lower(x - pts[i].x); }

  // Where f_b (b right of a) drops to or below f_a for good.
  double cross(int a, int b) const {
    const double w = ball.half_width();
    double lo = pts[b].x - w, hi = pts[a].x + w;
    if (lo >= hi) return hi;
    auto d = [&](double x) { return f(a, x) - f(b, x); };
    if (d(lo) >= 0) return lo;
    if (d(hi) < 0) return hi;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (d(mid) >= 0 ? hi : lo) = mid;
    }
    return hi;
  }
};

}  // namespace

double HullChain::center_height(double c) const {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), c,
                             [](double v, const HullPiece& p) { return v < p.hi; });
  if (it == pieces.end()) --it;
  if (it->owner < 0) return 0.0;
  const Point2 a = points[it->owner];
  return std::min(0.0, a.y + ball.lower(c - a.x));
}

double HullChain::height(double x) const {
  const double w = ball.half_width();
  const double wl = x - w, wr = x + w;
  double best = -kInf;
  auto it = std::lower_bound(pieces.begin(), pieces.end(), wl,
                             [](const HullPiece& p, double v) { return p.hi < v; });
  for (; it != pieces.end() && it->lo <= wr; ++it) {
    const double l = std::max(it->lo, wl), r = std::min(it->hi, wr);
    if (l > r) continue;
    double c, cy;
    if (it->owner < 0) {
      c = std::clamp(x - ball.upper_argmax(), l, r);
      cy = 0.0;
    } else {
      const Point2 a = points[it->owner];
      c = x > a.x ? r : (x < a.x ? l : std::clamp(a.x, l, r));
      cy = std::min(0.0, a.y + ball.lower(c - a.x));
    }
    best = std::max(best, cy + ball.upper(x - c));
  }
  return best;
}

std::pair<double, double> HullChain::extent(double x) const {
  constexpr double kStep = 1e-9;
  double lo = kInf, hi = -kInf;
  for (double s : {x - kStep, x, x + kStep}) {
    const double h = height(s);
    if (h == -kInf) continue;
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return {lo, hi};
}

HullChain hull_points(std::span<const Point2> points, const UnitBall& ball) {
  HullChain ch;
  ch.points.assign(points.begin(), points.end());
  ch.ball = ball;
  for (const Point2& p : ch.points) {
    if (!(p.y > 0)) throw GeometryError("hull input must lie above the axis");
  }
  std::vector<int> order(ch.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Point2 &p = ch.points[a], &q = ch.points[b];
    return p.x != q.x ? p.x < q.x : (p.y != q.y ? p.y < q.y : a < b);
  });

  const Envelope env{ch.points, ch.ball};
  std::vector<int> stack;
  std::vector<double> start;
  double last_x = -kInf;
  for (int i : order) {
    const Point2 p = ch.points[i];
    if (p.x == last_x) continue;  // a lower point with this abscissa dominates
    if (!ball.below(p.y)) continue;
    last_x = p.x;
    double s = -kInf;
    while (!stack.empty()) {
      s = env.cross(stack.back(), i);
      if (stack.size() >= 2 && s <= start.back()) {
        stack.pop_back();
        start.pop_back();
        continue;
      }
      break;
    }
    if (stack.empty()) s = -kInf;
    stack.push_back(i);
    start.push_back(s);
  }

  std::vector<HullPiece> arcs;
  for (std::size_t k = 0; k < stack.size(); ++k) {
    const int i = stack[k];
    const Point2 p = ch.points[i];
    const auto neg = *ball.below(p.y);
    const double lo = std::max(start[k], p.x + neg.first);
    const double hi = std::min(k + 1 < stack.size() ? start[k + 1] : kInf, p.x + neg.second);
    if (lo < hi) arcs.push_back({i, lo, hi});
  }
  double at = -kInf;
  for (const HullPiece& a : arcs) {
    if (a.lo > at) ch.pieces.push_back({-1, at, a.lo});
    ch.pieces.push_back(a);
    at = a.hi;
    ch.members.push_back(a.owner);
    const double m = 0.5 * (a.lo + a.hi);
    ch.witnesses.push_back({m, env.f(a.owner, m)});
  }
  ch.pieces.push_back({-1, at, kInf});
  return ch;
}

std::pair<Point2, Point2> boundary_circle_intersections(Point2 p, const HullChain& chain) {
  const UnitBall& ball = chain.ball;
  const double w = ball.half_width();
  auto in = [&](double x) {
    auto [lo, hi] = chain.extent(x);
    if (lo == kInf) return false;
    return ball.meets_segment(Point2{x, lo} - p, Point2{x, hi} - p);
  };
  std::optional<double> seed;
  for (int m : chain.members) {
    const Point2 a = chain.points[m];
    if (std::abs(a.x - p.x) <= w && in(a.x)) {
      seed = a.x;
      break;
    }
  }
  if (!seed) {
    constexpr int kSamples = 256;
    for (int k = 0; k <= kSamples && !seed; ++k) {
      const double x = p.x - w + 2 * w * k / kSamples;
      if (in(x)) seed = x;
    }
  }
  if (!seed) throw GeometryError("no cross neighbors");

  auto bisect = [&](double out, double inside) {
    for (int it = 0; it < 80 && std::abs(out - inside) > 1e-12; ++it) {
      const double mid = 0.5 * (out + inside);
      (in(mid) ? inside : out) = mid;
    }
    return inside;
  };
  const double x1 = bisect(p.x - w - 1e-9, *seed);
  const double x2 = bisect(p.x + w + 1e-9, *seed);
  return {Point2{x1, chain.height(x1)}, Point2{x2, chain.height(x2)}};
}

// ---------------------------------------------------------------------------

BipartiteResult bipartite_2hop(const BipartiteInput& in) {
  const int n = static_cast<int>(in.points.size());
  if (static_cast<int>(in.above.size()) != n) throw std::invalid_argument("side flags");
  for (int i = 0; i < n; ++i) {
    if (in.above[i] ? !(in.points[i].y > 0) : !(in.points[i].y < 0)) {
      throw GeometryError("points not separated by the axis");
    }
  }
  auto adjacent = [&](int u, int v) {
    if (in.adjacent) return in.adjacent(u, v);
    return in.ball.contains(in.points[u] - in.points[v], kEps);
  };
  std::vector<std::vector<int>> cross(n);
  for (int u = 0; u < n; ++u) {
    if (!in.above[u]) continue;
    for (int v = 0; v < n; ++v) {
      if (!in.above[v] && adjacent(u, v)) {
        cross[u].push_back(v);
        cross[v].push_back(u);
      }
    }
  }
  for (auto& c : cross) std::sort(c.begin(), c.end());

  const UnitBall mball = in.ball.mirrored();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(cross[v].size());

  BipartiteResult res;
  std::vector<char> seen(n, 0);
  std::map<Edge, int> dedup;
  while (true) {
    int p = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && deg[v] > 0 && (p < 0 || deg[v] > deg[p])) p = v;
    }
    if (p < 0) break;
    PeelStep st;
    st.p = p;
    for (int u : cross[p]) {
      if (alive[u]) st.n_p.push_back(u);
    }
    std::vector<int> nnp;
    for (int u : st.n_p) {
      for (int v : cross[u]) {
        if (alive[v] && !seen[v]) {
          seen[v] = 1;
          nnp.push_back(v);
        }
      }
    }
    for (int v : nnp) seen[v] = 0;
    std::sort(nnp.begin(), nnp.end());

    // Frame with the opposite side above the axis.
    const bool flip = in.above[p];
    const UnitBall& ball = flip ? mball : in.ball;
    auto frame = [&](int v) {
      const Point2 q = in.points[v];
      return flip ? Point2{q.x, -q.y} : q;
    };
    std::vector<int> opp;
    std::vector<Point2> opp_pts;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && in.above[v] != in.above[p]) {
        opp.push_back(v);
        opp_pts.push_back(frame(v));
      }
    }
    std::vector<char> excluded(n, 0);
    try {
      const HullChain chain = hull_points(opp_pts, ball);
      auto [p1, p2] = boundary_circle_intersections(frame(p), chain);
      st.p1 = p1;
      st.p2 = p2;
      for (const Point2 pk : {p1, p2}) {
        auto [lo, hi] = chain.extent(pk.x);
        for (int q : nnp) {
          const Point2 fq = frame(q);
          if (ball.meets_segment(Point2{pk.x, lo} - fq, Point2{pk.x, hi} - fq, 1e-7)) {
            excluded[q] = 1;
          }
        }
      }
    } catch (const GeometryError&) {
      st.boundary_found = false;
    }
    if (st.boundary_found) {
      for (int q : nnp) {
        if (!excluded[q] && q != p) st.i_p.push_back(q);
      }
    }

    std::vector<char> in_np(n, 0);
    for (int u : st.n_p) in_np[u] = 1;
    for (int v : st.i_p) {
      for (int u : cross[v]) {
        if (alive[u] && !in_np[u]) st.second_neighbour_ok = false;
      }
    }
    st.w = st.n_p;
    st.w.insert(st.w.end(), st.i_p.begin(), st.i_p.end());
    st.w.push_back(p);
    std::sort(st.w.begin(), st.w.end());
    for (int u : st.n_p) st.star_edges.push_back(make_edge(p, u));
    for (int v : nnp) {
      if (v != p) st.star_edges.push_back(make_edge(p, v));
    }
    if (st.star_edges.size() > 5 * st.w.size()) res.step_bound_ok = false;
    if (!st.second_neighbour_ok) res.second_neighbour_ok = false;
    for (const Edge& e : st.star_edges) dedup.emplace(e, 0);

    for (int v : st.w) {
      alive[v] = 0;
      for (int u : cross[v]) --deg[u];
    }
    res.steps.push_back(std::move(st));
  }
  for (const auto& [e, _] : dedup) res.edges.push_back(e);
  return res;
}

Spanner bipartite_2hop(std::span<const Point2> a, std::span<const Point2> b) {
  BipartiteInput in;
  in.points.assign(a.begin(), a.end());
  in.points.insert(in.points.end(), b.begin(), b.end());
  in.above.assign(a.size(), 1);
  in.above.resize(a.size() + b.size(), 0);
  const BipartiteResult r = bipartite_2hop(in);
  SpannerBuilder sb(static_cast<int>(in.points.size()));
  for (auto [u, v] : r.edges) sb.add(u, v, "udg:bipartite");
  return sb.build(2);
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kHexR = 0.5;
const double kSqrt3 = std::sqrt(3.0);

}  // namespace

HexTiling::HexTiling(std::span<const Point2> points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, kSqrt3 * kHexR);
  std::uniform_real_distribution<double> uy(0.0, 3.0 * kHexR);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    offset_ = {ux(rng), uy(rng)};
    bool clear = true;
    for (const Point2& p : points) {
      if (boundary_distance(p) <= 1e-9) {
        clear = false;
        break;
      }
    }
    if (clear) return;
  }
  throw GeometryError("no tiling offset keeps points off tile edges");
}

HexTiling::Tile HexTiling::tile_of(Point2 p) const {
  const Point2 v = p - offset_;
  const double fq = (kSqrt3 / 3 * v.x - v.y / 3) / kHexR;
  const double fr = (2.0 / 3 * v.y) / kHexR;
  const double fs = -fq - fr;
  double q = std::round(fq), r = std::round(fr), s = std::round(fs);
  const double dq = std::abs(q - fq), dr = std::abs(r - fr), ds = std::abs(s - fs);
  if (dq > dr && dq > ds) {
    q = -r - s;
  } else if (dr > ds) {
    r = -q - s;
  }
  return {static_cast<int>(q), static_cast<int>(r)};
}

Point2 HexTiling::center(Tile t) const {
  return offset_ + Point2{kHexR * kSqrt3 * (t.q + 0.5 * t.r), kHexR * 1.5 * t.r};
}

ConvexPolygon HexTiling::hexagon(Tile t) const {
  return ConvexPolygon::regular(6, kHexR, center(t), M_PI / 6);
}

double HexTiling::boundary_distance(Point2 p) const {
  const Point2 v = p - center(tile_of(p));
  double m = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double a = M_PI / 3 * k;
    m = std::max(m, std::abs(v.x * std::cos(a) + v.y * std::sin(a)));
  }
  return kHexR * kSqrt3 / 2 - m;
}

std::vector<HexTiling::Tile> HexTiling::neighbour_offsets(double d) {
  const ConvexPolygon h0 = ConvexPolygon::regular(6, kHexR, {0, 0}, M_PI / 6);
  const int reach = static_cast<int>(std::ceil(d / (kHexR * 1.5))) + 2;
  std::vector<Tile> out;
  for (int q = -reach; q <= reach; ++q) {
    for (int r = -reach; r <= reach; ++r) {
      if (q == 0 && r == 0) continue;
      const Point2 c{kHexR * kSqrt3 * (q + 0.5 * r), kHexR * 1.5 * r};
      if (convex_distance(h0, h0.translated(c)) <= d + kEps) out.push_back({q, r});
    }
  }
  return out;
}

Spanner udg_2hop(std::span<const Point2> points, const UdgOptions& opt,
                 TiledSpannerStats* stats) {
  const int n = static_cast<int>(points.size());
  SpannerBuilder sb(n);
  TiledSpannerStats st;
  if (n == 0) {
    if (stats) *stats = st;
    return sb.build(2);
  }
  const HexTiling tiling(points, opt.seed);
  std::map<HexTiling::Tile, std::vector<int>> tiles;
  for (int i = 0; i < n; ++i) tiles[tiling.tile_of(points[i])].push_back(i);
  st.tiles = tiles.size();

  for (const auto& [t, members] : tiles) {
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (sb.add(members[0], members[k], "udg:tile-star")) ++st.star_edges;
    }
  }
  const auto offsets = HexTiling::neighbour_offsets(1.0);
  for (const auto& [sigma, a] : tiles) {
    for (const auto& off : offsets) {
      const HexTiling::Tile tau{sigma.q + off.q, sigma.r + off.r};
      if (!(sigma < tau)) continue;
      auto it = tiles.find(tau);
      if (it == tiles.end()) continue;
      const auto& b = it->second;
      bool any = false;
      for (int u : a) {
        for (int v : b) any = any || unit_adjacent(points[u], points[v]);
      }
      if (!any) continue;
      ++st.tile_pairs;

      std::vector<Point2> pa, pb;
      for (int u : a) pa.push_back(points[u]);
      for (int v : b) pb.push_back(points[v]);
      const SeparatingFrame fr =
          separating_axis_transform(pa, pb, tiling.hexagon(sigma), tiling.hexagon(tau));
      if (fr.line_shifted) ++st.shifted_frames;
      BipartiteInput in;
      std::vector<int> ids(a.begin(), a.end());
      ids.insert(ids.end(), b.begin(), b.end());
      for (int u : ids) in.points.push_back(fr.transform.apply(points[u]));
      in.above.assign(a.size(), 1);
      in.above.resize(ids.size(), 0);
      in.adjacent = [&](int u, int v) { return unit_adjacent(points[ids[u]], points[ids[v]]); };
      const BipartiteResult r = bipartite_2hop(in);
      st.second_neighbour_ok = st.second_neighbour_ok && r.second_neighbour_ok;
      st.step_bound_ok = st.step_bound_ok && r.step_bound_ok;
      for (auto [u, v] : r.edges) {
        if (sb.add(ids[u], ids[v], "udg:bipartite")) ++st.pair_edges;
      }
    }
  }
  if (stats) *stats = st;
  return sb.build(2);
}

}  // namespace hopspan
