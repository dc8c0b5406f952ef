#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopspan/graph.hpp"

namespace hopspan {

/// Radius-1 ball of a norm, centered at the origin and centrally symmetric.
/// Polygon balls must have vertical supporting lines where their boundary
/// meets the x-axis (the x-extent is attained on the axis); see
/// vertical_tangent_shear.
class UnitBall {
 public:
  static UnitBall euclidean();
  static UnitBall polygon(const ConvexPolygon& body);

  bool is_euclidean() const { return euclidean_; }
  const ConvexPolygon& body() const { return body_; }
  /// Half of the x-extent.
  double half_width() const { return w_; }
  /// Lower / upper boundary height at horizontal offset t; +inf / -inf for
  /// |t| > half_width().
  double lower(double t) const;
  double upper(double t) const;
  /// Offset where upper() peaks.
  double upper_argmax() const { return upper_peak_; }
  /// Offsets [lo, hi] where lower(t) < -h (h > 0); empty pair if none.
  std::optional<std::pair<double, double>> below(double h) const;
  /// ||v|| <= 1 + tol.
  bool contains(Point2 v, double tol = 0.0) const;
  /// The segment [a, b] meets the ball scaled by (1 + tol).
  bool meets_segment(Point2 a, Point2 b, double tol = 0.0) const;
  /// Reflection in the x-axis.
  UnitBall mirrored() const;

 private:
  bool euclidean_ = true;
  double w_ = 1.0;
  double upper_peak_ = 0.0;
  ConvexPolygon body_;
  std::vector<Point2> lower_chain_;  // ascending x
  std::vector<Point2> upper_chain_;  // ascending x
};

/// Boundary piece of hull(S): on [lo, hi] the extreme empty-ball centers lie
/// on the axis (owner == -1) or on the lower boundary of the ball around
/// point `owner`.
struct HullPiece {
  int owner = -1;
  double lo = 0.0;
  double hi = 0.0;
};

/// Boundary of the hull of a point set above the x-axis, with respect to
/// balls centered on or below the axis.
struct HullChain {
  std::vector<Point2> points;   ///< input, all strictly above the axis
  UnitBall ball;
  std::vector<HullPiece> pieces;  ///< ascending, covering the real line
  std::vector<int> members;       ///< points on the boundary, ascending x
  std::vector<Point2> witnesses;  ///< empty-ball center per member

  /// Height h(c) of the highest empty-ball center over abscissa c (<= 0).
  double center_height(double c) const;
  /// Height of the hull boundary over x.
  double height(double x) const;
  /// Vertical extent of the boundary near x (covers jumps).
  std::pair<double, double> extent(double x) const;
};

HullChain hull_points(std::span<const Point2> points,
                      const UnitBall& ball = UnitBall::euclidean());

/// First and last points of (p + ball) ∩ ∂hull, for p below the axis.
/// Throws GeometryError("no cross neighbors") when the ball misses the
/// boundary.
std::pair<Point2, Point2> boundary_circle_intersections(Point2 p,
                                                        const HullChain& chain);

/// Points separated by the x-axis with a ground-truth adjacency oracle.
struct BipartiteInput {
  std::vector<Point2> points;
  std::vector<char> above;
  UnitBall ball = UnitBall::euclidean();
  /// Cross-side adjacency; defaults to ball distance <= 1 + kEps.
  std::function<bool(int, int)> adjacent;
};

struct PeelStep {
  int p = -1;
  Point2 p1, p2;
  std::vector<int> n_p;  ///< N(p)
  std::vector<int> i_p;  ///< I(p)
  std::vector<int> w;    ///< removed set
  std::vector<Edge> star_edges;
  bool boundary_found = true;  ///< false: p1/p2 unavailable, I(p) left empty
  bool second_neighbour_ok = true;  ///< N(I(p)) ⊆ N(p)
};

struct BipartiteResult {
  std::vector<Edge> edges;  ///< deduplicated
  std::vector<PeelStep> steps;
  bool second_neighbour_ok = true;
  bool step_bound_ok = true;  ///< |star| <= 5|W| at every step
};

BipartiteResult bipartite_2hop(const BipartiteInput& in);
/// Euclidean convenience: A above, B below; vertices A then B.
Spanner bipartite_2hop(std::span<const Point2> a, std::span<const Point2> b);

/// Hexagonal tiling with tiles of diameter 1 (circumradius 1/2), offset by
/// a seeded random shift so that no point lies within 1e-9 of a tile edge.
class HexTiling {
 public:
  HexTiling(std::span<const Point2> points, std::uint64_t seed);

  struct Tile {
    int q = 0, r = 0;
    auto operator<=>(const Tile&) const = default;
  };
  Point2 offset() const { return offset_; }
  Tile tile_of(Point2 p) const;
  Point2 center(Tile t) const;
  ConvexPolygon hexagon(Tile t) const;
  /// Distance from p to the boundary of its tile.
  double boundary_distance(Point2 p) const;
  /// Axial offsets of tiles at Euclidean distance <= d (excluding self).
  static std::vector<Tile> neighbour_offsets(double d);

 private:
  Point2 offset_;
};

struct TiledSpannerStats {
  std::size_t tiles = 0;
  std::size_t tile_pairs = 0;
  std::size_t star_edges = 0;
  std::size_t pair_edges = 0;
  std::size_t shifted_frames = 0;
  bool second_neighbour_ok = true;
  bool step_bound_ok = true;
};

struct UdgOptions {
  std::uint64_t seed = 0x5eedULL;
};

Spanner udg_2hop(std::span<const Point2> points, const UdgOptions& opt = {},
                 TiledSpannerStats* stats = nullptr);

}  // namespace hopspan
