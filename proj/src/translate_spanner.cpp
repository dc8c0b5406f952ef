#include "hopspan/translate_spanner.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

namespace hopspan {

ConvexPolygon symmetrize(const ConvexPolygon& c) {
  std::vector<Point2> neg;
  for (const Point2& p : c.vertices()) neg.push_back(-p);
  return minkowski_sum(c, ConvexPolygon(std::move(neg))).scaled(0.5);
}

ConvexPolygon GaugeBody::normalized() const {
  std::vector<Point2> v;
  for (const Point2& p : polygon.vertices()) v.push_back(apply(p));
  return ConvexPolygon(std::move(v));
}

GaugeBody normalize_john(const ConvexPolygon& symmetric) {
  // Origin-centred minimum-volume ellipse of the vertices (the body is
  // symmetric, so the optimum is centred); Frank-Wolfe with away steps.
  constexpr double kTol = 1e-6;
  constexpr int kMaxIter = 10000;
  const auto& v = symmetric.vertices();
  const int m = static_cast<int>(v.size());
  Eigen::MatrixXd pts(2, m);
  for (int i = 0; i < m; ++i) pts.col(i) << v[i].x, v[i].y;
  Eigen::VectorXd u = Eigen::VectorXd::Constant(m, 1.0 / m);
  const double d = 2.0;
  GaugeBody g;
  g.polygon = symmetric;
  Eigen::Matrix2d x;
  bool converged = false;
  for (int it = 0; it < kMaxIter; ++it) {
    x = pts * u.asDiagonal() * pts.transpose();
    const Eigen::Matrix2d xi = x.inverse();
    Eigen::VectorXd mv(m);
    for (int i = 0; i < m; ++i) mv(i) = pts.col(i).dot(xi * pts.col(i));
    int j = 0, k = -1;
    for (int i = 0; i < m; ++i) {
      if (mv(i) > mv(j)) j = i;
      if (u(i) > 0 && (k < 0 || mv(i) < mv(k))) k = i;
    }
    const double up = (mv(j) - d) / d;
    const double down = (d - mv(k)) / d;
    g.iterations = it;
    if (up <= kTol && down <= kTol) {
      converged = true;
      break;
    }
    if (up >= down) {
      const double step = (mv(j) - d) / (d * (mv(j) - 1));
      u *= 1 - step;
      u(j) += step;
    } else {
      const double drop = -u(k) / (1 - u(k));
      const double step = mv(k) > 1 ? std::max((mv(k) - d) / (d * (mv(k) - 1)), drop) : drop;
      u *= 1 - step;
      u(k) += step;
      if (u(k) < 1e-15) u(k) = 0;
    }
  }
  if (!converged) throw GeometryError("john ellipse iteration did not converge");
  // Ellipse {p : p^T (X^-1 / d) p <= 1}; map by its symmetric square root.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(x.inverse() / d);
  Eigen::Matrix2d l = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
                      es.eigenvectors().transpose();
  double r = 0;
  for (int i = 0; i < m; ++i) r = std::max(r, (l * pts.col(i)).norm());
  l /= r;  // tolerance slack: keep the body inside the unit disk
  g.map[0] = l(0, 0);
  g.map[1] = l(0, 1);
  g.map[2] = l(1, 0);
  g.map[3] = l(1, 1);
  return g;
}

GaugeNorm::GaugeNorm(const ConvexPolygon& body) {
  const auto& v = body.vertices();
  std::size_t s = 0;
  std::vector<double> a(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    a[i] = std::atan2(v[i].y, v[i].x);
    if (a[i] < a[s]) s = i;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    verts_.push_back(v[(s + i) % v.size()]);
    angles_.push_back(a[(s + i) % v.size()]);
  }
}

double GaugeNorm::operator()(Point2 v) const {
  if (v.x == 0 && v.y == 0) return 0.0;
  const double t = std::atan2(v.y, v.x);
  const std::size_t m = verts_.size();
  const std::size_t hi =
      static_cast<std::size_t>(std::upper_bound(angles_.begin(), angles_.end(), t) - angles_.begin());
  const Point2 a = verts_[(hi + m - 1) % m], b = verts_[hi % m];
  const Point2 e = b - a;
  const Point2 n{e.y, -e.x};
  return dot(n, v) / dot(n, a);
}

ShearFrame vertical_tangent_shear(const ConvexPolygon& ball) {
  const auto s = slice_at_y(ball, 0.0);
  if (!s) throw GeometryError("ball misses the axis");
  const Point2 x{s->second, 0.0};
  const auto& v = ball.vertices();
  const std::size_t m = v.size();
  auto outward = [](Point2 a, Point2 b) {
    const Point2 e = b - a;
    return Point2{e.y, -e.x} / norm(e);
  };
  ShearFrame f;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % m];
    if (dist(a, x) <= 1e-12) {
      // Vertex on the axis: bisect the normal cone of its two edges.
      const Point2 n = outward(v[(i + m - 1) % m], a) + outward(a, b);
      f.at_vertex = true;
      f.shear = n.y / n.x;
      return f;
    }
    const Point2 e = b - a;
    if (std::abs(cross(e, x - a)) <= 1e-12 * norm(e) && dot(x - a, e) > 0 && dot(x - b, e) < 0) {
      if (e.y == 0) throw GeometryError("horizontal edge on the axis");
      f.shear = -e.x / e.y;
      return f;
    }
  }
  // Closest edge as fallback for rounding in the slice.
  std::size_t best = 0;
  double bd = 1e300;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % m];
    const double dd = std::abs(cross(b - a, x - a)) / norm(b - a);
    if (dd < bd && (a.y - 0) * (b.y - 0) <= 0) {
      bd = dd;
      best = i;
    }
  }
  const Point2 e = v[(best + 1) % m] - v[best];
  f.shear = -e.x / e.y;
  return f;
}

Spanner translates_2hop(const ConvexPolygon& c, std::span<const Point2> offsets,
                        const TranslateOptions& opt, TranslateStats* stats) {
  const int n = static_cast<int>(offsets.size());
  SpannerBuilder sb(n);
  TranslateStats st;
  if (n == 0) {
    if (stats) *stats = st;
    return sb.build(2);
  }
  const GaugeBody g = normalize_john(symmetrize(c));
  // Adjacency is ||v_i - v_j|| <= 2 in the symmetrized gauge.
  const ConvexPolygon ball = g.normalized().scaled(2.0);
  std::vector<Point2> pts;
  for (const Point2& o : offsets) pts.push_back(g.apply(o) - g.offset);
  std::vector<ConvexPolygon> placed;
  for (const Point2& o : offsets) placed.push_back(c.translated(o));
  auto adjacent = [&](int u, int v) { return polygons_intersect(placed[u], placed[v]); };

  const HexTiling tiling(pts, opt.seed);
  std::map<HexTiling::Tile, std::vector<int>> tiles;
  for (int i = 0; i < n; ++i) tiles[tiling.tile_of(pts[i])].push_back(i);
  st.tiles = tiles.size();
  for (const auto& [t, members] : tiles) {
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (sb.add(members[0], members[k], "translate:tile-star")) ++st.star_edges;
    }
  }
  const auto offsets2 = HexTiling::neighbour_offsets(2.0);
  for (const auto& [sigma, a] : tiles) {
    for (const auto& off : offsets2) {
      const HexTiling::Tile tau{sigma.q + off.q, sigma.r + off.r};
      if (!(sigma < tau)) continue;
      auto it = tiles.find(tau);
      if (it == tiles.end()) continue;
      const auto& b = it->second;
      bool any = false;
      for (int u : a) {
        for (int v : b) {
          if (!any && adjacent(u, v)) any = true;
        }
      }
      if (!any) continue;
      ++st.tile_pairs;

      std::vector<Point2> pa, pb;
      for (int u : a) pa.push_back(pts[u]);
      for (int v : b) pb.push_back(pts[v]);
      const SeparatingFrame fr =
          separating_axis_transform(pa, pb, tiling.hexagon(sigma), tiling.hexagon(tau));
      if (fr.line_shifted) ++st.shifted_frames;
      const RigidTransform& rt = fr.transform;
      const double rot[4] = {rt.cos_t, -rt.sin_t, rt.sin_t, rt.cos_t};
      const ConvexPolygon rball = ball.transformed(rot);
      const ShearFrame sh = vertical_tangent_shear(rball);
      if (sh.at_vertex) ++st.vertex_tangents;
      const double shear[4] = {1, sh.shear, 0, 1};

      BipartiteInput in;
      std::vector<int> ids(a.begin(), a.end());
      ids.insert(ids.end(), b.begin(), b.end());
      for (int u : ids) {
        const Point2 q = rt.apply(pts[u]);
        in.points.push_back({q.x + sh.shear * q.y, q.y});
      }
      in.above.assign(a.size(), 1);
      in.above.resize(ids.size(), 0);
      in.ball = UnitBall::polygon(rball.transformed(shear));
      in.adjacent = [&](int u, int v) { return adjacent(ids[u], ids[v]); };
      const BipartiteResult r = bipartite_2hop(in);
      st.second_neighbour_ok = st.second_neighbour_ok && r.second_neighbour_ok;
      st.step_bound_ok = st.step_bound_ok && r.step_bound_ok;
      for (auto [u, v] : r.edges) {
        if (sb.add(ids[u], ids[v], "translate:bipartite")) ++st.pair_edges;
      }
    }
  }
  if (stats) *stats = st;
  return sb.build(2);
}

}  // namespace hopspan
