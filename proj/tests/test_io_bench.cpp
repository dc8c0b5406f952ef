#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "hopspan/bench.hpp"
#include "hopspan/svg.hpp"

using namespace hopspan;
using nlohmann::json;

namespace {

std::string golden_path(const std::string& name) {
  return std::string(HOPSPAN_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against a frozen file; HOPSPAN_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const std::string path = golden_path(name);
  if (std::getenv("HOPSPAN_UPDATE_GOLDEN")) write_text(path, actual);
  EXPECT_EQ(slurp(path), actual) << name;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(SpannerJson, RoundTripIsBitExact) {
  Spanner s;
  s.n = 4;
  s.t = 2;
  s.edges = {{0, 1}, {1, 3}, {2, 3}};
  s.provenance = {"a", "b", "a"};
  const std::string text = spanner_to_json(s).dump();
  const Spanner back = spanner_from_json(json::parse(text));
  EXPECT_EQ(back.n, 4);
  EXPECT_EQ(back.t, 2);
  EXPECT_EQ(back.edges, s.edges);
  EXPECT_EQ(back.provenance, s.provenance);
  EXPECT_EQ(spanner_to_json(back).dump(), text);
}

TEST(SpannerJson, RejectsBadInput) {
  EXPECT_THROW(spanner_from_json(json::parse(R"({"n":2,"t":2,"edges":[[0,2]]})")), FormatError);
  EXPECT_THROW(spanner_from_json(json::parse(R"({"n":2,"edges":[]})")), FormatError);
  EXPECT_THROW(
      spanner_from_json(json::parse(R"({"n":3,"t":2,"edges":[[0,1]],"provenance":["a","b"]})")),
      FormatError);
  const Spanner s = spanner_from_json(json::parse(R"({"n":3,"t":2,"edges":[[0,1]]})"));
  EXPECT_EQ(s.provenance, std::vector<std::string>{""});
}

TEST(GeometryJson, GoldenFilesRoundTrip) {
  for (const char* name : {"geometry_disks.json", "geometry_rects.json", "geometry_intervals.json",
                           "geometry_polygons.json", "geometry_translates.json"}) {
    const json j = read_json(golden_path(name));
    const Geometry g = geometry_from_json(j);
    EXPECT_EQ(g.items.size(), j["items"].size()) << name;
    const json back = geometry_to_json(g);
    EXPECT_EQ(back, j) << name;
    EXPECT_EQ(geometry_from_json(back).items.size(), g.items.size());
  }
}

TEST(GeometryJson, DoublesSurvive) {
  Geometry g;
  g.type = "disks";
  g.items.push_back(UnitDiskCenter{{0.1 + 0.2, std::nextafter(1.0, 2.0)}});
  const Geometry back = geometry_from_json(json::parse(geometry_to_json(g).dump()));
  const Point2 c = std::get<UnitDiskCenter>(back.items[0]).center;
  EXPECT_EQ(c.x, 0.1 + 0.2);
  EXPECT_EQ(c.y, std::nextafter(1.0, 2.0));
}

TEST(GeometryJson, Errors) {
  EXPECT_THROW(geometry_from_json(json::parse(R"({"type":"blobs","items":[[0,0]]})")), FormatError);
  EXPECT_THROW(geometry_from_json(json::parse(R"({"type":"disks","items":[[0]]})")), FormatError);
  EXPECT_THROW(geometry_from_json(json::parse(
                   R"({"type":"translates","bodies":[],"items":[{"body":0,"offset":[0,0]}]})")),
               FormatError);
  EXPECT_THROW(read_json(golden_path("does_not_exist.json")), FormatError);
}

TEST(GeometryJson, GoldenSpannerForDisks) {
  const Geometry g = geometry_from_json(read_json(golden_path("geometry_disks.json")));
  const IntersectionGraph graph = geometry_graph(g);
  const Spanner s = build_spanner(g, graph, "udg_2hop");
  EXPECT_TRUE(verify_hop_spanner(graph, s, 2).valid);
  expect_golden("spanner_disks.json", spanner_to_json(s).dump(1) + "\n");
  const Spanner frozen = spanner_from_json(read_json(golden_path("spanner_disks.json")));
  EXPECT_TRUE(verify_hop_spanner(graph, frozen, 2).valid);
}

TEST(RealizationJson, RoundTrip) {
  const LevelGraph f = gen_F(2);
  const HomothetRealization r = realize_F(2, ConvexPolygon::from_rect(make_rect(0, 1, 0, 1)));
  const json j = realization_to_json(f, r);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["placements"].size(), 12u);
  const HomothetRealization back = realization_from_json(json::parse(j.dump()));
  ASSERT_EQ(back.placements.size(), r.placements.size());
  for (std::size_t i = 0; i < r.placements.size(); ++i) {
    EXPECT_EQ(back.placements[i].scale, r.placements[i].scale);
    EXPECT_EQ(back.placements[i].dx, r.placements[i].dx);
    EXPECT_EQ(back.placements[i].dy, r.placements[i].dy);
  }
  const IntersectionGraph g = realization_graph(back);
  EXPECT_EQ(g.edges(), f.edges);
  expect_golden("realization_F1.json",
                realization_to_json(gen_F(1), realize_F(1, ConvexPolygon::from_rect(
                                                              make_rect(0, 1, 0, 1))))
                        .dump(1) + "\n");
}

TEST(Families, Parse) {
  EXPECT_EQ(parse_family("squares").family, "squares");
  EXPECT_EQ(parse_family("F(3)").h, 3);
  const InstanceSpec p = parse_family("fat-polygons(12, 1.1)");
  EXPECT_EQ(p.k, 12);
  EXPECT_DOUBLE_EQ(p.alpha, 1.1);
  EXPECT_DOUBLE_EQ(parse_family("fat-rects(3)").alpha, 3.0);
  for (const char* f : {"squares", "F(3)", "fat-polygons(12,1.1)", "fat-rects(3)", "fat-polygons(6)"}) {
    EXPECT_EQ(family_label(parse_family(f)), f);
  }
  EXPECT_THROW(parse_family("hexes"), std::invalid_argument);
  EXPECT_THROW(parse_family("F"), std::invalid_argument);
  EXPECT_THROW(parse_family("F(1.5)"), std::invalid_argument);
  EXPECT_THROW(parse_family("squares(2)"), std::invalid_argument);
  EXPECT_THROW(parse_family("fat-rects(x)"), std::invalid_argument);
}

TEST(Families, Deterministic) {
  InstanceSpec s = parse_family("udg-uniform");
  s.n = 10;
  s.seed = 7;
  const std::string a = geometry_to_json(generate(s).geometry).dump();
  EXPECT_EQ(a, geometry_to_json(generate(s).geometry).dump());
  s.seed = 8;
  EXPECT_NE(a, geometry_to_json(generate(s).geometry).dump());

  InstanceSpec iv = parse_family("intervals");
  iv.n = 0;
  EXPECT_TRUE(generate(iv).geometry.items.empty());

  const Instance f2 = generate(parse_family("F(2)"));
  EXPECT_EQ(f2.geometry.items.size(), 12u);
  EXPECT_EQ(f2.spec.n, 12);
  for (const GeomObject& o : f2.geometry.items) {
    EXPECT_EQ(std::get<ConvexPolygon>(o).size(), 4u);
  }
  EXPECT_EQ(instance_graph(f2).edges(), gen_F(2).edges);
}

TEST(Families, FatnessCaps) {
  InstanceSpec r = parse_family("fat-rects(1.8)");
  r.n = 300;
  EXPECT_LE(geometry_alpha(generate(r).geometry), 1.8 + 1e-12);
  r.alpha = 1.2;
  EXPECT_THROW(generate(r), std::invalid_argument);

  for (const char* fam : {"fat-polygons(6,1.2)", "fat-polygons(12,1.2)", "fat-polygons(6,2.5)"}) {
    InstanceSpec p = parse_family(fam);
    p.n = 200;
    EXPECT_LE(geometry_alpha(generate(p).geometry), p.alpha + 1e-9) << fam;
  }
  EXPECT_THROW(generate(parse_family("fat-polygons(6,1.1)")), std::invalid_argument);
}

TEST(Families, PerturbMovesEverything) {
  InstanceSpec s = parse_family("squares");
  s.n = 50;
  const Geometry a = generate(s).geometry;
  s.perturb = 1e-6;
  const Geometry b = generate(s).geometry;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    const AxisRect& x = std::get<AxisRect>(a.items[i]);
    const AxisRect& y = std::get<AxisRect>(b.items[i]);
    EXPECT_NE(x, y);
    EXPECT_LE(std::abs(x.x_lo - y.x_lo), 1e-6);
    EXPECT_LE(std::abs(x.y_lo - y.y_lo), 1e-6);
  }
}

TEST(Bench, CsvSchema) {
  EXPECT_EQ(csv_header(), "family,n,seed,construction,t,edges,bound,ratio,build_ms,verify_ms,verified");
  BenchRecord r;
  r.family = "squares";
  r.n = 10;
  r.seed = 3;
  r.construction = "fat_rect_2hop";
  r.t = 2;
  r.edges = 12;
  r.bound = "alpha^2*n*log2(n)";
  r.ratio = 0.25;
  r.build_ms = 1.234;
  r.verify_ms = 0.5;
  r.verified = true;
  EXPECT_EQ(csv_row(r), "squares,10,3,fat_rect_2hop,2,12,alpha^2*n*log2(n),0.25,1.23,0.50,true");
  r.family = "fat-polygons(6,1.2)";
  EXPECT_EQ(csv_row(r).substr(0, 22), "\"fat-polygons(6,1.2)\",");
}

TEST(Bench, Slope) {
  const std::vector<double> x = {1, 2, 3, 4}, y = {3, 5, 7, 9};
  EXPECT_DOUBLE_EQ(least_squares_slope(x, y), 2.0);
  EXPECT_EQ(least_squares_slope(std::vector<double>{1}, std::vector<double>{1}), 0.0);
}

TEST(Bench, Examples) {
  InstanceSpec u = parse_family("udg-uniform");
  u.n = 1000;
  const BenchRecord ru = bench(u, "udg_2hop");
  EXPECT_TRUE(ru.verified);
  EXPECT_LT(ru.edges, 91000u);
  EXPECT_EQ(ru.t, 2);

  InstanceSpec sq = parse_family("squares");
  sq.n = 2000;
  const BenchRecord rs = bench(sq, "fat_rect_2hop");
  EXPECT_TRUE(rs.verified);
  EXPECT_GT(rs.ratio, 0.0);
  EXPECT_NEAR(rs.ratio, rs.edges / (2.0 * 2000 * std::log2(2000.0)), 1e-9);

  InstanceSpec rm = parse_family("rects-mixed");
  rm.n = 500;
  const BenchRecord rr = bench(rm, "rect_3hop");
  EXPECT_TRUE(rr.verified);
  EXPECT_EQ(rr.t, 3);
}

TEST(Bench, EveryFamilyDefaultVerifies) {
  for (const char* fam : {"udg-uniform", "translates", "intervals", "squares", "fat-rects(2)",
                          "rects-mixed", "fat-polygons(6,1.2)", "F(3)"}) {
    InstanceSpec s = parse_family(fam);
    s.n = 150;
    const BenchRecord r = bench(s, default_construction(s));
    EXPECT_TRUE(r.verified) << fam;
    EXPECT_GT(r.n, 0) << fam;
  }
}

TEST(Bench, InapplicableConstruction) {
  InstanceSpec s = parse_family("intervals");
  s.n = 20;
  EXPECT_THROW(bench(s, "udg_2hop"), std::invalid_argument);
}

TEST(Svg, EmptyCanvas) {
  const std::string svg = render_svg({});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(svg, "<circle"), 0u);
  EXPECT_EQ(count(svg, "<line"), 0u);
}

TEST(Svg, DisksAndEdges) {
  const std::vector<GeomObject> o = {UnitDiskCenter{{0, 0}}, UnitDiskCenter{{0.8, 0}},
                                     UnitDiskCenter{{1.6, 0}}};
  Spanner s;
  s.n = 3;
  s.t = 2;
  s.edges = {{0, 1}, {1, 2}};
  s.provenance = {"star", "pair"};
  const std::string svg = render_svg(o, &s);
  EXPECT_EQ(count(svg, "<circle"), 3u);
  EXPECT_EQ(count(svg, "<line"), 2u);
  // Two labels, two colors.
  std::set<std::string> colors;
  std::regex stroke("<line[^>]*stroke=\"(#[0-9a-f]{6})\"");
  for (std::sregex_iterator it(svg.begin(), svg.end(), stroke), end; it != end; ++it) {
    colors.insert((*it)[1]);
  }
  EXPECT_EQ(colors.size(), 2u);
  EXPECT_EQ(svg, render_svg(o, &s));
}

TEST(Svg, RealizationOfF2) {
  const Instance f = generate(parse_family("F(2)"));
  const std::string svg = render_svg(f.geometry.items);
  EXPECT_EQ(count(svg, "<polygon"), 12u);
  EXPECT_EQ(svg, render_svg(f.geometry.items));
}

TEST(Svg, GoldenFiles) {
  for (const char* name : {"rects", "intervals", "polygons", "translates"}) {
    const Geometry g =
        geometry_from_json(read_json(golden_path(std::string("geometry_") + name + ".json")));
    const IntersectionGraph graph = geometry_graph(g);
    const Spanner s = build_spanner(g, graph, default_construction(g));
    EXPECT_TRUE(verify_hop_spanner(graph, s, s.t).valid) << name;
    expect_golden(std::string("render_") + name + ".svg", render_svg(g.items, &s));
  }
}
