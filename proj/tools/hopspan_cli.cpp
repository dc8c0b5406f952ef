// Command-line front end: instance generation, spanner construction,
// verification, benchmarks, lower-bound realizations and SVG rendering.

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopspan/bench.hpp"
#include "hopspan/svg.hpp"

using namespace hopspan;

namespace {

struct Common {
  std::string family = "udg-uniform";
  int n = 1000;
  std::uint64_t seed = 1;
  double alpha = 0.0;
  double density = 2.0;
  double perturb = 0.0;
  std::string in;
  std::string out;
};

void add_instance_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--family", c.family, "Instance family, e.g. squares, fat-polygons(6,1.2), F(3)");
  cmd->add_option("--n", c.n, "Number of objects")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", c.seed, "Generator seed");
  cmd->add_option("--alpha", c.alpha, "Fatness cap for fat-rects / fat-polygons");
  cmd->add_option("--density", c.density, "Points per unit area (udg-uniform, translates)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--perturb{1e-6}", c.perturb,
                "Jitter every object uniformly (default magnitude 1e-6)");
  cmd->add_option("--in", c.in, "Geometry JSON instead of a generated family");
}

InstanceSpec spec_of(const Common& c) {
  InstanceSpec s = parse_family(c.family);
  s.n = c.n;
  s.seed = c.seed;
  if (c.alpha > 0) s.alpha = c.alpha;
  s.density = c.density;
  s.perturb = c.perturb;
  return s;
}

Instance load(const Common& c) {
  if (!c.in.empty()) {
    Instance inst;
    inst.geometry = geometry_from_json(read_json(c.in));
    inst.spec.family = inst.geometry.type;
    inst.spec.n = static_cast<int>(inst.geometry.items.size());
    return inst;
  }
  return generate(spec_of(c));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

int report(const VerificationReport& v, int t) {
  std::cerr << (v.valid ? "verified" : "FAILED") << " t=" << t
            << " max_stretch=" << v.max_observed_stretch
            << " violations=" << v.violating_edges.size() << "\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(v.violating_edges.size(), 10); ++i) {
    std::cerr << "  " << v.violating_edges[i].first << " " << v.violating_edges[i].second << "\n";
  }
  return v.valid ? 0 : 1;
}

ConvexPolygon named_body(const std::string& name) {
  if (name == "square") return ConvexPolygon::from_rect(make_rect(0, 1, 0, 1));
  if (name == "triangle") return ConvexPolygon::regular(3, 1.0);
  if (name == "disk") return ConvexPolygon::regular(64, 1.0);
  throw std::invalid_argument("unknown body '" + name + "' (square, triangle, disk)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hop spanners for geometric intersection graphs"};
  app.require_subcommand(1);

  Common c;
  std::string construction;
  int t = 0;
  std::string graph_out, spanner_in, body = "square";
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  int h = -1;

  auto* graph = app.add_subcommand("graph", "Write the instance geometry and its intersection graph");
  add_instance_flags(graph, c);
  graph->add_option("--out", c.out, "Geometry JSON output (default stdout)");
  graph->add_option("--graph-out", graph_out, "Intersection graph JSON output");

  auto* spanner = app.add_subcommand("spanner", "Build and verify a hop spanner");
  add_instance_flags(spanner, c);
  spanner->add_option("--construction", construction, "Construction (default: family's own)");
  spanner->add_option("--t", t, "Hop bound for the greedy construction")->check(CLI::PositiveNumber);
  spanner->add_option("--out", c.out, "Spanner JSON output (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a spanner JSON against a geometry JSON");
  verify->add_option("--in", c.in, "Geometry JSON")->required();
  verify->add_option("--spanner", spanner_in, "Spanner JSON")->required();
  verify->add_option("--t", t, "Hop bound (default: the spanner's t)");

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark constructions as CSV");
  bench_cmd->add_option("--family", c.family, "Instance family");
  bench_cmd->add_option("--n", sizes, "Sizes (default 125 250 500 1000 2000 4000)");
  bench_cmd->add_option("--seed", seeds, "Seeds (default 1)");
  bench_cmd->add_option("--alpha", c.alpha, "Fatness cap");
  bench_cmd->add_option("--density", c.density, "Points per unit area")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--perturb{1e-6}", c.perturb, "Jitter magnitude");
  bench_cmd->add_option("--construction", construction, "Construction (default: family's own)");
  bench_cmd->add_option("--t", t, "Hop bound for greedy")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", c.out, "CSV output (default stdout)");

  auto* lbgen = app.add_subcommand("lbgen", "Realize the lower-bound family F(h) by homothets");
  lbgen->add_option("--depth", h, "Depth h of F(h)")->required()->check(CLI::Range(0, 16));
  lbgen->add_option("--body", body, "Base body: square, triangle, disk");
  lbgen->add_option("--out", c.out, "Realization JSON output (default stdout)");

  auto* render = app.add_subcommand("render", "Render geometry and an optional spanner as SVG");
  add_instance_flags(render, c);
  render->add_option("--spanner", spanner_in, "Spanner JSON to overlay");
  render->add_option("--construction", construction, "Build and overlay this construction");
  render->add_option("--t", t, "Hop bound for greedy");
  render->add_option("--out", c.out, "SVG output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (graph->parsed()) {
      const Instance inst = load(c);
      const IntersectionGraph g = instance_graph(inst);
      emit(c.out, geometry_to_json(inst.geometry).dump(1) + "\n");
      if (!graph_out.empty()) {
        Spanner s = as_spanner(g);
        write_text(graph_out, spanner_to_json(s).dump() + "\n");
      }
      std::cerr << "n=" << g.n() << " edges=" << g.num_edges() << "\n";
      return 0;
    }

    if (spanner->parsed()) {
      const Instance inst = load(c);
      const IntersectionGraph g = instance_graph(inst);
      if (construction.empty()) {
        construction = inst.realization ? "greedy" : default_construction(inst.geometry);
      }
      const int gt = t > 0 ? t : 2;
      const Spanner s = build_spanner(inst.geometry, g, construction, gt);
      emit(c.out, spanner_to_json(s).dump() + "\n");
      std::cerr << construction << ": n=" << s.n << " edges=" << s.size() << "\n";
      return report(verify_hop_spanner(g, s, s.t), s.t);
    }

    if (verify->parsed()) {
      const Geometry geo = geometry_from_json(read_json(c.in));
      const Spanner s = spanner_from_json(read_json(spanner_in));
      const int tt = t > 0 ? t : s.t;
      return report(verify_hop_spanner(geometry_graph(geo), s, tt), tt);
    }

    if (bench_cmd->parsed()) {
      if (sizes.empty()) sizes = kDefaultBenchSizes;
      if (seeds.empty()) seeds = {1};
      std::string csv = csv_header() + "\n";
      bool all = true;
      std::vector<double> xs, ys;
      for (int n : sizes) {
        for (std::uint64_t seed : seeds) {
          Common cell = c;
          cell.n = n;
          cell.seed = seed;
          const InstanceSpec spec = spec_of(cell);
          std::string con = construction;
          if (con.empty()) con = default_construction(spec);
          const BenchRecord r = bench(spec, con, t > 0 ? t : 2);
          csv += csv_row(r) + "\n";
          all = all && r.verified;
          xs.push_back(std::log2(static_cast<double>(std::max(r.n, 1))));
          ys.push_back(static_cast<double>(r.edges) / std::max(r.n, 1));
        }
      }
      emit(c.out, csv);
      std::cerr << "slope(edges/n vs log2 n)=" << least_squares_slope(xs, ys) << "\n";
      return all ? 0 : 1;
    }

    if (lbgen->parsed()) {
      const LevelGraph f = gen_F(h);
      const HomothetRealization r = realize_F(h, named_body(body));
      emit(c.out, realization_to_json(f, r).dump() + "\n");
      std::cerr << "F(" << h << "): n=" << f.n() << " edges=" << f.edges.size()
                << " realization matches\n";
      return 0;
    }

    if (render->parsed()) {
      const Instance inst = load(c);
      std::optional<Spanner> s;
      int status = 0;
      if (!spanner_in.empty()) {
        s = spanner_from_json(read_json(spanner_in));
      } else if (!construction.empty()) {
        const IntersectionGraph g = instance_graph(inst);
        s = build_spanner(inst.geometry, g, construction, t > 0 ? t : 2);
        status = report(verify_hop_spanner(g, *s, s->t), s->t);
      }
      emit(c.out, render_svg(inst.geometry.items, s ? &*s : nullptr));
      return status;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
