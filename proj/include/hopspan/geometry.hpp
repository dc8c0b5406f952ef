#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hopspan {

/// Absolute tolerance used by every geometric predicate in the library.
inline constexpr double kEps = 1e-9;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedPredicate : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator-() const { return {-x, -y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2 operator/(double s) const { return {x / s, y / s}; }
  bool operator==(const Point2&) const = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double dist2(Point2 a, Point2 b) {
  const Point2 d = a - b;
  return d.x * d.x + d.y * d.y;
}

/// Closed product [x_lo, x_hi] x [y_lo, y_hi].
struct AxisRect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }
  bool contains(Point2 p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  /// Counterclockwise from the lower-left corner.
  std::vector<Point2> corners() const {
    return {{x_lo, y_lo}, {x_hi, y_lo}, {x_hi, y_hi}, {x_lo, y_hi}};
  }
  bool operator==(const AxisRect&) const = default;
};

/// Throws GeometryError unless lo <= hi on both axes.
AxisRect make_rect(double x_lo, double x_hi, double y_lo, double y_hi);

bool rects_intersect(const AxisRect& a, const AxisRect& b);

// A convex polygon with counterclockwise vertices. Polygons built through the
// public constructor are validated (at least three vertices, strictly convex
// turns, positive area). Clipping can produce degenerate results (a segment
// or a single point when a body only touches a strip); those are built with
// `ConvexPolygon::degenerate` and report `is_degenerate() == true`.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point2> vertices);

  /// Convex hull of arbitrary points; collinear points are dropped.
  static ConvexPolygon hull_of(std::vector<Point2> points);
  static ConvexPolygon from_rect(const AxisRect& r);
  static ConvexPolygon regular(int k, double circumradius, Point2 center = {},
                               double phase = 0.0);
  static ConvexPolygon degenerate(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_degenerate() const { return degenerate_; }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  double area() const;
  Point2 centroid() const;
  AxisRect bounding_box() const;
  bool contains(Point2 p, double eps = kEps) const;

  ConvexPolygon translated(Point2 offset) const;
  /// Applies p -> m * p for the row-major 2x2 matrix m.
  ConvexPolygon transformed(const double (&m)[4]) const;
  ConvexPolygon scaled(double s) const;

 private:
  std::vector<Point2> vertices_;
  bool degenerate_ = false;
};

struct Fatness {
  double rho_out = 0.0;
  double rho_in = 0.0;
  double alpha = 0.0;
};

struct Circle {
  Point2 center;
  double radius = 0.0;
};

Circle min_enclosing_circle(std::span<const Point2> points);
/// Chebyshev center of the polygon's halfplane system.
Circle max_inscribed_circle(const ConvexPolygon& p);
Fatness fatness(const ConvexPolygon& p);

/// Intersection with the strip y_lo <= y <= y_hi; may be degenerate.
std::optional<ConvexPolygon> clip_to_slab(const ConvexPolygon& p, double y_lo,
                                          double y_hi);
/// Convex intersection of two polygons (Sutherland-Hodgman); may be
/// degenerate, empty when the polygons are disjoint.
std::optional<ConvexPolygon> intersect_convex(const ConvexPolygon& a,
                                              const ConvexPolygon& b);

/// x-extent of the polygon along the horizontal line y, if it meets it.
std::optional<std::pair<double, double>> slice_at_y(const ConvexPolygon& p,
                                                    double y);

/// Euclidean distance between two convex polygons (0 when they meet).
double convex_distance(const ConvexPolygon& a, const ConvexPolygon& b);
/// Closest points (on a, on b); only meaningful when the polygons are apart.
std::pair<Point2, Point2> closest_points(const ConvexPolygon& a,
                                         const ConvexPolygon& b);
/// Minimum overlap over all edge normals; negative means a separating gap.
double penetration_depth(const ConvexPolygon& a, const ConvexPolygon& b);
bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b);

/// Minkowski sum of convex polygons by edge merging.
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

/// Vertex payload of a unit disk graph: disks of radius 1/2, so two centers
/// are adjacent iff their distance is at most 1.
struct UnitDiskCenter {
  Point2 center;
};

struct Translate {
  std::shared_ptr<const ConvexPolygon> body;
  int body_id = 0;
  Point2 offset;

  ConvexPolygon placed() const { return body->translated(offset); }
};

using GeomObject =
    std::variant<Interval, UnitDiskCenter, AxisRect, ConvexPolygon, Translate>;

/// Adjacency of unit disk centers (distance <= 1 within kEps).
inline bool unit_adjacent(Point2 a, Point2 b) {
  return dist(a, b) <= 1.0 + kEps;
}

/// Closed-set intersection test. Throws UnsupportedPredicate for mixed pairs
/// without a defined predicate (intervals or disks against anything else).
bool intersects(const GeomObject& a, const GeomObject& b);

/// Bounding box of an object (intervals become degenerate boxes on y = 0).
AxisRect bounding_box(const GeomObject& o);
Point2 representative_point(const GeomObject& o);

/// Proper rigid motion p -> R(theta) p + t.
struct RigidTransform {
  double cos_t = 1.0;
  double sin_t = 0.0;
  Point2 shift;

  Point2 apply(Point2 p) const {
    return {cos_t * p.x - sin_t * p.y + shift.x,
            sin_t * p.x + cos_t * p.y + shift.y};
  }
  Point2 apply_linear(Point2 v) const {
    return {cos_t * v.x - sin_t * v.y, sin_t * v.x + cos_t * v.y};
  }
  double angle() const { return std::atan2(sin_t, cos_t); }
};

struct SeparatingFrame {
  RigidTransform transform;
  /// Set when a point sat on the nominal separating line of the tiles and
  /// the line was moved to the middle of the gap between the point sets.
  bool line_shifted = false;
};

/// Rigid motion taking a separating line of sigma and tau to the x-axis, with
/// the points of `above` (inside sigma) strictly above and `below` (inside
/// tau) strictly below. Throws GeometryError if the tiles' interiors overlap
/// or the point sets cannot be strictly separated.
SeparatingFrame separating_axis_transform(std::span<const Point2> above,
                                          std::span<const Point2> below,
                                          const ConvexPolygon& sigma,
                                          const ConvexPolygon& tau);

}  // namespace hopspan
