#pragma once

#include <span>

#include "hopspan/udg_spanner.hpp"

namespace hopspan {

/// Centrally symmetric body with a linear map (plus offset) under which it
/// contains the radius-1/2 disk and lies in the unit disk.
struct GaugeBody {
  ConvexPolygon polygon;
  double map[4] = {1, 0, 0, 1};  // row-major
  Point2 offset;
  int iterations = 0;

  Point2 apply(Point2 p) const {
    return {map[0] * p.x + map[1] * p.y + offset.x, map[2] * p.x + map[3] * p.y + offset.y};
  }
  ConvexPolygon normalized() const;
};

/// 1/2 (C ⊕ -C).
ConvexPolygon symmetrize(const ConvexPolygon& c);

/// Maps the minimum-area enclosing ellipse of a centrally symmetric polygon
/// to the unit disk. Throws GeometryError if the iteration does not reach
/// relative tolerance 1e-6 within 10^4 steps.
GaugeBody normalize_john(const ConvexPolygon& symmetric);

/// Gauge norm of v for a polygon containing the origin in its interior.
class GaugeNorm {
 public:
  explicit GaugeNorm(const ConvexPolygon& body);
  double operator()(Point2 v) const;

 private:
  std::vector<Point2> verts_;
  std::vector<double> angles_;
};

struct ShearFrame {
  double shear = 0.0;  ///< x' = x + shear * y
  bool at_vertex = false;
};

/// Shear making the supporting lines at the x-axis crossings of a centrally
/// symmetric body vertical. A crossing at a vertex uses the line bisecting
/// the normal cone.
ShearFrame vertical_tangent_shear(const ConvexPolygon& ball);

struct TranslateStats : TiledSpannerStats {
  std::size_t vertex_tangents = 0;
};

struct TranslateOptions {
  std::uint64_t seed = 0x5eedULL;
};

Spanner translates_2hop(const ConvexPolygon& c, std::span<const Point2> offsets,
                        const TranslateOptions& opt = {}, TranslateStats* stats = nullptr);

}  // namespace hopspan
