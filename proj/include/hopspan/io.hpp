#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopspan/graph.hpp"
#include "hopspan/lower_bound.hpp"

namespace hopspan {

/// A homogeneous object list as read from or written to JSON.
/// type is one of disks, rects, intervals, polygons, translates.
struct Geometry {
  std::string type;
  std::vector<GeomObject> items;
  /// Bodies referenced by translates.
  std::vector<std::shared_ptr<const ConvexPolygon>> bodies;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json spanner_to_json(const Spanner& s);
Spanner spanner_from_json(const nlohmann::json& j);

nlohmann::json geometry_to_json(const Geometry& g);
Geometry geometry_from_json(const nlohmann::json& j);

/// Graph JSON of F(h) with the realization's placements and base body.
nlohmann::json realization_to_json(const LevelGraph& f, const HomothetRealization& r);
HomothetRealization realization_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace hopspan
