#include "hopspan/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace hopspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double signed_area2(const std::vector<Point2>& v) {
  double s = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    s += cross(v[i], v[(i + 1) % n]);
  }
  return s;
}

double point_segment_dist(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + ab * t);
}

Point2 closest_on_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * t;
}

int orient(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// Edge list of a possibly degenerate vertex cycle; a single point is a
// zero-length edge and a segment contributes one edge.
std::vector<std::pair<Point2, Point2>> edges_of(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  std::vector<std::pair<Point2, Point2>> out;
  if (v.size() == 1) {
    out.push_back({v[0], v[0]});
  } else if (v.size() == 2) {
    out.push_back({v[0], v[1]});
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back({v[i], v[(i + 1) % v.size()]});
    }
  }
  return out;
}

// Drops repeated and (nearly) collinear vertices of a convex cycle.
std::vector<Point2> clean_cycle(const std::vector<Point2>& in) {
  std::vector<Point2> v;
  for (const Point2& p : in) {
    if (v.empty() || dist(v.back(), p) > 1e-13 * (1.0 + norm(p))) {
      v.push_back(p);
    }
  }
  while (v.size() > 1 &&
         dist(v.front(), v.back()) <= 1e-13 * (1.0 + norm(v.back()))) {
    v.pop_back();
  }
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point2 a = v[(i + v.size() - 1) % v.size()];
      const Point2 b = v[i];
      const Point2 c = v[(i + 1) % v.size()];
      const double c2 = cross(b - a, c - b);
      if (c2 <= 1e-14 * norm(b - a) * norm(c - b)) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return v;
}

ConvexPolygon region_from(const std::vector<Point2>& pts) {
  std::vector<Point2> v = clean_cycle(pts);
  if (v.size() >= 3 && signed_area2(v) > 0) return ConvexPolygon(std::move(v));
  if (v.size() >= 3) {
    // Numerically flat: keep the two extreme points.
    auto [lo, hi] = std::minmax_element(
        v.begin(), v.end(), [](Point2 a, Point2 b) {
          return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
    v = {*lo, *hi};
  }
  return ConvexPolygon::degenerate(std::move(v));
}

// Keeps the part of the cycle with dot(n, p) >= c.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, Point2 n,
                                   double c) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  if (m == 1) {
    if (dot(n, poly[0]) >= c) out.push_back(poly[0]);
    return out;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % m];
    const double sa = dot(n, a) - c;
    const double sb = dot(n, b) - c;
    if (sa >= 0) out.push_back(a);
    if ((sa >= 0) != (sb >= 0)) {
      const double t = sa / (sa - sb);
      out.push_back(a + (b - a) * t);
    }
    if (m == 2) break;  // a segment is one edge, not a cycle
  }
  if (m == 2 && (dot(n, poly[1]) - c) >= 0) out.push_back(poly[1]);
  return out;
}

Circle circle_from(Point2 a, Point2 b) {
  return {(a + b) * 0.5, dist(a, b) * 0.5};
}

Circle circle_from(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) < 1e-300) {
    // Collinear: the widest pair decides.
    Circle best = circle_from(a, b);
    for (const Circle& k : {circle_from(a, c), circle_from(b, c)}) {
      if (k.radius > best.radius) best = k;
    }
    return best;
  }
  const double b2 = dot(ab, ab), c2 = dot(ac, ac);
  const Point2 u{(ac.y * b2 - ab.y * c2) / d, (ab.x * c2 - ac.x * b2) / d};
  return {a + u, norm(u)};
}

bool in_circle(const Circle& c, Point2 p) {
  return dist(c.center, p) <= c.radius * (1.0 + 1e-12) + 1e-15;
}

}  // namespace

AxisRect make_rect(double x_lo, double x_hi, double y_lo, double y_hi) {
  if (!(x_lo <= x_hi) || !(y_lo <= y_hi)) {
    throw GeometryError("rectangle with lo > hi");
  }
  return {x_lo, x_hi, y_lo, y_hi};
}

bool rects_intersect(const AxisRect& a, const AxisRect& b) {
  return a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi &&
         b.y_lo <= a.y_hi;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw GeometryError("polygon needs 3 vertices");
  for (const Point2& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw GeometryError("non-finite polygon vertex");
    }
  }
  if (signed_area2(vertices_) < 0) {
    std::reverse(vertices_.begin(), vertices_.end());
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const Point2 c = vertices_[(i + 2) % n];
    if (!(cross(b - a, c - b) > 0)) {
      throw GeometryError("polygon is not strictly convex");
    }
  }
}

ConvexPolygon ConvexPolygon::hull_of(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw GeometryError("hull of fewer than 3 points");
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw GeometryError("hull is degenerate");
  return ConvexPolygon(std::move(h));
}

ConvexPolygon ConvexPolygon::from_rect(const AxisRect& r) {
  if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi)) {
    return degenerate(clean_cycle(r.corners()));
  }
  return ConvexPolygon(r.corners());
}

ConvexPolygon ConvexPolygon::regular(int k, double circumradius, Point2 center,
                                     double phase) {
  if (k < 3 || !(circumradius > 0)) throw GeometryError("bad regular polygon");
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double a = phase + 2.0 * M_PI * i / k;
    v.push_back({center.x + circumradius * std::cos(a),
                 center.y + circumradius * std::sin(a)});
  }
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::degenerate(std::vector<Point2> vertices) {
  ConvexPolygon p;
  p.vertices_ = std::move(vertices);
  p.degenerate_ = true;
  return p;
}

double ConvexPolygon::area() const {
  return degenerate_ ? 0.0 : 0.5 * signed_area2(vertices_);
}

Point2 ConvexPolygon::centroid() const {
  if (vertices_.empty()) return {};
  const double a2 = signed_area2(vertices_);
  if (degenerate_ || a2 == 0.0) {
    Point2 s;
    for (const Point2& p : vertices_) s = s + p;
    return s / static_cast<double>(vertices_.size());
  }
  Point2 c;
  for (std::size_t i = 0, n = vertices_.size(); i < n; ++i) {
    const Point2 a = vertices_[i], b = vertices_[(i + 1) % n];
    c = c + (a + b) * cross(a, b);
  }
  return c / (3.0 * a2);
}

AxisRect ConvexPolygon::bounding_box() const {
  AxisRect r{kInf, -kInf, kInf, -kInf};
  for (const Point2& p : vertices_) {
    r.x_lo = std::min(r.x_lo, p.x);
    r.x_hi = std::max(r.x_hi, p.x);
    r.y_lo = std::min(r.y_lo, p.y);
    r.y_hi = std::max(r.y_hi, p.y);
  }
  return r;
}

bool ConvexPolygon::contains(Point2 p, double eps) const {
  if (degenerate_) {
    if (vertices_.empty()) return false;
    if (vertices_.size() == 1) return dist(p, vertices_[0]) <= eps;
    return point_segment_dist(p, vertices_[0], vertices_[1]) <= eps;
  }
  for (std::size_t i = 0, n = vertices_.size(); i < n; ++i) {
    const Point2 a = vertices_[i], b = vertices_[(i + 1) % n];
    if (cross(b - a, p - a) / norm(b - a) < -eps) return false;
  }
  return true;
}

ConvexPolygon ConvexPolygon::translated(Point2 offset) const {
  ConvexPolygon out = *this;
  for (Point2& p : out.vertices_) p = p + offset;
  return out;
}

ConvexPolygon ConvexPolygon::transformed(const double (&m)[4]) const {
  std::vector<Point2> v;
  v.reserve(vertices_.size());
  for (const Point2& p : vertices_) {
    v.push_back({m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y});
  }
  if (degenerate_) return degenerate(std::move(v));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
  const double m[4] = {s, 0.0, 0.0, s};
  return transformed(m);
}

Circle min_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) throw GeometryError("enclosing circle of no points");
  std::vector<Point2> p(points.begin(), points.end());
  std::mt19937 rng(0x5eed);
  std::shuffle(p.begin(), p.end(), rng);
  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (in_circle(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (in_circle(c, p[j])) continue;
      c = circle_from(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!in_circle(c, p[k])) c = circle_from(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

Circle max_inscribed_circle(const ConvexPolygon& poly) {
  if (poly.is_degenerate()) throw GeometryError("degenerate polygon");
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  std::vector<Point2> normals(n);
  std::vector<double> offsets(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e = v[(i + 1) % n] - v[i];
    const Point2 in = Point2{-e.y, e.x} / norm(e);  // inward for CCW
    normals[i] = in;
    offsets[i] = dot(in, v[i]);
  }
  const AxisRect bb = poly.bounding_box();
  const std::vector<Point2> box = {
      {bb.x_lo, bb.y_lo}, {bb.x_hi, bb.y_lo}, {bb.x_hi, bb.y_hi},
      {bb.x_lo, bb.y_hi}};
  auto feasible = [&](double r) {
    std::vector<Point2> cur = box;
    for (std::size_t i = 0; i < n && !cur.empty(); ++i) {
      cur = clip_halfplane(cur, normals[i], offsets[i] + r);
    }
    return cur;
  };
  double lo = 0.0;
  double hi = 0.5 * std::min(bb.width(), bb.height());
  std::vector<Point2> best = feasible(0.0);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    std::vector<Point2> reg = feasible(mid);
    if (reg.empty()) {
      hi = mid;
    } else {
      lo = mid;
      best = std::move(reg);
    }
  }
  Point2 c;
  for (const Point2& p : best) c = c + p;
  c = c / static_cast<double>(best.size());
  return {c, lo};
}

Fatness fatness(const ConvexPolygon& p) {
  if (p.is_degenerate() || p.size() < 3) {
    throw GeometryError("fatness of a degenerate polygon");
  }
  const Circle out = min_enclosing_circle(p.vertices());
  const Circle in = max_inscribed_circle(p);
  if (!(in.radius > 0)) throw GeometryError("polygon has empty interior");
  return {out.radius, in.radius, out.radius / in.radius};
}

std::optional<ConvexPolygon> clip_to_slab(const ConvexPolygon& p, double y_lo,
                                          double y_hi) {
  std::vector<Point2> cur = p.vertices();
  cur = clip_halfplane(cur, {0.0, 1.0}, y_lo);
  cur = clip_halfplane(cur, {0.0, -1.0}, -y_hi);
  if (cur.empty()) return std::nullopt;
  return region_from(cur);
}

std::optional<ConvexPolygon> intersect_convex(const ConvexPolygon& a,
                                              const ConvexPolygon& b) {
  if (a.size() == 0 || b.size() == 0) return std::nullopt;
  if (!polygons_intersect(a, b)) return std::nullopt;
  const ConvexPolygon* subject = &a;
  const ConvexPolygon* clipper = &b;
  if (clipper->is_degenerate() && !subject->is_degenerate()) {
    std::swap(subject, clipper);
  }
  if (clipper->is_degenerate()) {
    // Two degenerate sets that meet: report a meeting point.
    auto [pa, pb] = closest_points(a, b);
    return ConvexPolygon::degenerate({(pa + pb) * 0.5});
  }
  std::vector<Point2> cur = subject->vertices();
  const auto& v = clipper->vertices();
  for (std::size_t i = 0, n = v.size(); i < n && !cur.empty(); ++i) {
    const Point2 e = v[(i + 1) % n] - v[i];
    const Point2 in = Point2{-e.y, e.x} / norm(e);
    cur = clip_halfplane(cur, in, dot(in, v[i]) - kEps);
  }
  if (cur.empty()) {
    auto [pa, pb] = closest_points(a, b);
    return ConvexPolygon::degenerate({(pa + pb) * 0.5});
  }
  return region_from(cur);
}

std::optional<std::pair<double, double>> slice_at_y(const ConvexPolygon& p,
                                                    double y) {
  double lo = kInf, hi = -kInf;
  for (const auto& [a, b] : edges_of(p)) {
    if (a.y == y) {
      lo = std::min(lo, a.x);
      hi = std::max(hi, a.x);
    }
    if (b.y == y) {
      lo = std::min(lo, b.x);
      hi = std::max(hi, b.x);
    }
    if ((a.y < y && b.y > y) || (a.y > y && b.y < y)) {
      const double t = (y - a.y) / (b.y - a.y);
      const double x = a.x + t * (b.x - a.x);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

double convex_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
  const auto ea = edges_of(a);
  const auto eb = edges_of(b);
  for (const auto& [p, q] : ea) {
    for (const auto& [r, s] : eb) {
      if (segments_cross(p, q, r, s)) return 0.0;
    }
  }
  if (!a.is_degenerate() && b.size() > 0 && a.contains(b[0], 0.0)) return 0.0;
  if (!b.is_degenerate() && a.size() > 0 && b.contains(a[0], 0.0)) return 0.0;
  double best = kInf;
  for (const Point2& p : a.vertices()) {
    for (const auto& [r, s] : eb) best = std::min(best, point_segment_dist(p, r, s));
  }
  for (const Point2& p : b.vertices()) {
    for (const auto& [r, s] : ea) best = std::min(best, point_segment_dist(p, r, s));
  }
  return best;
}

std::pair<Point2, Point2> closest_points(const ConvexPolygon& a,
                                         const ConvexPolygon& b) {
  double best = kInf;
  std::pair<Point2, Point2> out;
  for (const Point2& p : a.vertices()) {
    for (const auto& [r, s] : edges_of(b)) {
      const Point2 q = closest_on_segment(p, r, s);
      if (dist(p, q) < best) {
        best = dist(p, q);
        out = {p, q};
      }
    }
  }
  for (const Point2& p : b.vertices()) {
    for (const auto& [r, s] : edges_of(a)) {
      const Point2 q = closest_on_segment(p, r, s);
      if (dist(p, q) < best) {
        best = dist(p, q);
        out = {q, p};
      }
    }
  }
  return out;
}

double penetration_depth(const ConvexPolygon& a, const ConvexPolygon& b) {
  double best = kInf;
  for (const ConvexPolygon* poly : {&a, &b}) {
    for (const auto& [p, q] : edges_of(*poly)) {
      const Point2 e = q - p;
      if (norm(e) == 0.0) continue;
      const Point2 n = Point2{-e.y, e.x} / norm(e);
      double a0 = kInf, a1 = -kInf, b0 = kInf, b1 = -kInf;
      for (const Point2& v : a.vertices()) {
        a0 = std::min(a0, dot(n, v));
        a1 = std::max(a1, dot(n, v));
      }
      for (const Point2& v : b.vertices()) {
        b0 = std::min(b0, dot(n, v));
        b1 = std::max(b1, dot(n, v));
      }
      best = std::min(best, std::min(a1, b1) - std::max(a0, b0));
    }
  }
  return best;
}

bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  const AxisRect ra = a.bounding_box(), rb = b.bounding_box();
  if (ra.x_lo > rb.x_hi + kEps || rb.x_lo > ra.x_hi + kEps ||
      ra.y_lo > rb.y_hi + kEps || rb.y_lo > ra.y_hi + kEps) {
    return false;
  }
  return convex_distance(a, b) <= kEps;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  auto start = [](const std::vector<Point2>& v) {
    std::size_t s = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i].y < v[s].y || (v[i].y == v[s].y && v[i].x < v[s].x)) s = i;
    }
    return s;
  };
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const std::size_t na = va.size(), nb = vb.size();
  std::size_t i = 0, j = 0;
  const std::size_t ia = start(va), ib = start(vb);
  std::vector<Point2> out;
  out.reserve(na + nb);
  while (i < na || j < nb) {
    out.push_back(va[(ia + i) % na] + vb[(ib + j) % nb]);
    const Point2 ea = va[(ia + i + 1) % na] - va[(ia + i) % na];
    const Point2 eb = vb[(ib + j + 1) % nb] - vb[(ib + j) % nb];
    const double c = cross(ea, eb);
    if (j >= nb || (i < na && c > 0)) {
      ++i;
    } else if (i >= na || c < 0) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return ConvexPolygon(clean_cycle(out));
}

bool intersects(const GeomObject& a, const GeomObject& b) {
  auto as_polygon = [](const GeomObject& o) -> std::optional<ConvexPolygon> {
    if (const auto* r = std::get_if<AxisRect>(&o)) {
      return ConvexPolygon::from_rect(*r);
    }
    if (const auto* p = std::get_if<ConvexPolygon>(&o)) return *p;
    if (const auto* t = std::get_if<Translate>(&o)) return t->placed();
    return std::nullopt;
  };
  if (const auto* ia = std::get_if<Interval>(&a)) {
    if (const auto* ib = std::get_if<Interval>(&b)) {
      return ia->lo <= ib->hi && ib->lo <= ia->hi;
    }
    throw UnsupportedPredicate("unsupported predicate: interval vs non-interval");
  }
  if (std::holds_alternative<Interval>(b)) {
    throw UnsupportedPredicate("unsupported predicate: interval vs non-interval");
  }
  if (const auto* da = std::get_if<UnitDiskCenter>(&a)) {
    if (const auto* db = std::get_if<UnitDiskCenter>(&b)) {
      return unit_adjacent(da->center, db->center);
    }
    throw UnsupportedPredicate("unsupported predicate: disk vs non-disk");
  }
  if (std::holds_alternative<UnitDiskCenter>(b)) {
    throw UnsupportedPredicate("unsupported predicate: disk vs non-disk");
  }
  const auto* ra = std::get_if<AxisRect>(&a);
  const auto* rb = std::get_if<AxisRect>(&b);
  if (ra && rb) return rects_intersect(*ra, *rb);
  return polygons_intersect(*as_polygon(a), *as_polygon(b));
}

AxisRect bounding_box(const GeomObject& o) {
  struct Visitor {
    AxisRect operator()(const Interval& i) const { return {i.lo, i.hi, 0, 0}; }
    AxisRect operator()(const UnitDiskCenter& d) const {
      return {d.center.x - 0.5, d.center.x + 0.5, d.center.y - 0.5,
              d.center.y + 0.5};
    }
    AxisRect operator()(const AxisRect& r) const { return r; }
    AxisRect operator()(const ConvexPolygon& p) const {
      return p.bounding_box();
    }
    AxisRect operator()(const Translate& t) const {
      return t.placed().bounding_box();
    }
  };
  return std::visit(Visitor{}, o);
}

Point2 representative_point(const GeomObject& o) {
  struct Visitor {
    Point2 operator()(const Interval& i) const { return {(i.lo + i.hi) / 2, 0}; }
    Point2 operator()(const UnitDiskCenter& d) const { return d.center; }
    Point2 operator()(const AxisRect& r) const {
      return {(r.x_lo + r.x_hi) / 2, (r.y_lo + r.y_hi) / 2};
    }
    Point2 operator()(const ConvexPolygon& p) const { return p.centroid(); }
    Point2 operator()(const Translate& t) const {
      return t.body->centroid() + t.offset;
    }
  };
  return std::visit(Visitor{}, o);
}

SeparatingFrame separating_axis_transform(std::span<const Point2> above,
                                          std::span<const Point2> below,
                                          const ConvexPolygon& sigma,
                                          const ConvexPolygon& tau) {
  auto range = [](const std::vector<Point2>& v, Point2 n) {
    double lo = kInf, hi = -kInf;
    for (const Point2& p : v) {
      lo = std::min(lo, dot(n, p));
      hi = std::max(hi, dot(n, p));
    }
    return std::make_pair(lo, hi);
  };

  Point2 n;
  double offset = 0.0;
  const double d = convex_distance(sigma, tau);
  if (d > kEps) {
    // Perpendicular bisector of the closest pair.
    auto [ps, pt] = closest_points(sigma, tau);
    n = (ps - pt) / norm(ps - pt);
    offset = dot(n, (ps + pt) * 0.5);
  } else {
    double best_gap = -kInf;
    for (const ConvexPolygon* poly : {&sigma, &tau}) {
      for (const auto& [p, q] : edges_of(*poly)) {
        const Point2 e = q - p;
        if (norm(e) == 0.0) continue;
        const Point2 u = Point2{-e.y, e.x} / norm(e);
        for (const Point2 cand : {u, -u}) {
          auto [s0, s1] = range(sigma.vertices(), cand);
          auto [t0, t1] = range(tau.vertices(), cand);
          if (s0 - t1 > best_gap) {
            best_gap = s0 - t1;
            n = cand;
            offset = 0.5 * (s0 + t1);
          }
        }
      }
    }
    if (best_gap < -kEps) throw GeometryError("tiles not separable");
  }

  double min_above = kInf, max_below = -kInf;
  for (const Point2& p : above) min_above = std::min(min_above, dot(n, p));
  for (const Point2& p : below) max_below = std::max(max_below, dot(n, p));

  SeparatingFrame frame;
  if (!(min_above - offset > kEps && offset - max_below > kEps)) {
    if (!(min_above - max_below > 2 * kEps)) {
      throw GeometryError("point sets not strictly separable");
    }
    offset = 0.5 * (min_above + max_below);
    frame.line_shifted = true;
  }
  // Rotation sending n to (0, 1); then y' = n . p.
  frame.transform.cos_t = n.y;
  frame.transform.sin_t = n.x;
  const Point2 mid = (sigma.centroid() + tau.centroid()) * 0.5;
  const Point2 rmid = frame.transform.apply_linear(mid);
  frame.transform.shift = {-rmid.x, -offset};
  return frame;
}

}  // namespace hopspan
