#include "hopspan/io.hpp"

#include <fstream>
#include <sstream>

namespace hopspan {

using nlohmann::json;

namespace {

json point(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("point must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json polygon(const ConvexPolygon& p) {
  json a = json::array();
  for (const Point2& v : p.vertices()) a.push_back(point(v));
  return a;
}

ConvexPolygon polygon_from(const json& j) {
  std::vector<Point2> v;
  for (const json& q : j) v.push_back(point_from(q));
  return ConvexPolygon(std::move(v));
}

}  // namespace

json spanner_to_json(const Spanner& s) {
  json edges = json::array();
  for (auto [u, v] : s.edges) edges.push_back(json::array({u, v}));
  return {{"n", s.n}, {"edges", edges}, {"t", s.t}, {"provenance", s.provenance}};
}

Spanner spanner_from_json(const json& j) {
  Spanner s;
  try {
    s.n = j.at("n").get<int>();
    s.t = j.at("t").get<int>();
    for (const json& e : j.at("edges")) s.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (j.contains("provenance")) s.provenance = j["provenance"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad spanner JSON: ") + e.what());
  }
  if (s.provenance.empty()) s.provenance.assign(s.edges.size(), "");
  if (s.provenance.size() != s.edges.size()) throw FormatError("provenance/edges length mismatch");
  for (auto [u, v] : s.edges) {
    if (u < 0 || v < 0 || u >= s.n || v >= s.n) throw FormatError("edge endpoint out of range");
  }
  return s;
}

json geometry_to_json(const Geometry& g) {
  json items = json::array();
  for (const GeomObject& o : g.items) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Interval>) {
            items.push_back(json::array({x.lo, x.hi}));
          } else if constexpr (std::is_same_v<T, UnitDiskCenter>) {
            items.push_back(point(x.center));
          } else if constexpr (std::is_same_v<T, AxisRect>) {
            items.push_back(json::array({x.x_lo, x.x_hi, x.y_lo, x.y_hi}));
          } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
            items.push_back(polygon(x));
          } else {
            items.push_back({{"body", x.body_id}, {"offset", point(x.offset)}});
          }
        },
        o);
  }
  json out = {{"type", g.type}, {"items", items}};
  if (g.type == "translates") {
    json bodies = json::array();
    for (const auto& b : g.bodies) bodies.push_back(polygon(*b));
    out["bodies"] = bodies;
  }
  return out;
}

Geometry geometry_from_json(const json& j) {
  Geometry g;
  try {
    g.type = j.at("type").get<std::string>();
    if (g.type == "translates") {
      for (const json& b : j.at("bodies")) {
        g.bodies.push_back(std::make_shared<const ConvexPolygon>(polygon_from(b)));
      }
    }
    for (const json& it : j.at("items")) {
      if (g.type == "disks") {
        g.items.push_back(UnitDiskCenter{point_from(it)});
      } else if (g.type == "intervals") {
        g.items.push_back(Interval{it.at(0).get<double>(), it.at(1).get<double>()});
      } else if (g.type == "rects") {
        g.items.push_back(make_rect(it.at(0).get<double>(), it.at(1).get<double>(),
                                    it.at(2).get<double>(), it.at(3).get<double>()));
      } else if (g.type == "polygons") {
        g.items.push_back(polygon_from(it));
      } else if (g.type == "translates") {
        const int id = it.at("body").get<int>();
        if (id < 0 || id >= static_cast<int>(g.bodies.size())) throw FormatError("unknown body id");
        g.items.push_back(Translate{g.bodies[id], id, point_from(it.at("offset"))});
      } else {
        throw FormatError("unknown geometry type '" + g.type + "'");
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad geometry JSON: ") + e.what());
  }
  return g;
}

json realization_to_json(const LevelGraph& f, const HomothetRealization& r) {
  Spanner s;
  s.n = f.n();
  s.edges = f.edges;
  s.provenance.assign(f.edges.size(), "F(" + std::to_string(f.h) + ")");
  json out = spanner_to_json(s);
  out["h"] = f.h;
  out["base"] = polygon(r.base);
  json pl = json::array();
  for (const Placement& p : r.placements) {
    pl.push_back({{"scale", p.scale}, {"dx", p.dx}, {"dy", p.dy}, {"x", p.x}, {"level", p.level}});
  }
  out["placements"] = pl;
  return out;
}

HomothetRealization realization_from_json(const json& j) {
  HomothetRealization r;
  try {
    r.h = j.at("h").get<int>();
    r.base = polygon_from(j.at("base"));
    for (const json& p : j.at("placements")) {
      r.placements.push_back({p.at("scale").get<double>(), p.at("dx").get<double>(),
                              p.at("dy").get<double>(), p.at("x").get<int>(), p.at("level").get<int>()});
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad realization JSON: ") + e.what());
  }
  return r;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace hopspan
