#include "hopspan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hopspan/fat_convex_spanner.hpp"
#include "hopspan/interval_spanner.hpp"
#include "hopspan/rect_spanner.hpp"
#include "hopspan/translate_spanner.hpp"
#include "hopspan/udg_spanner.hpp"

namespace hopspan {

namespace {

std::vector<double> parse_params(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family parameter '" + tok + "'");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) throw std::invalid_argument("bad family parameter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// Drawn from a separate stream so jitter does not change the base instance.
Point2 jitter(std::mt19937_64& rng, double mag) {
  std::uniform_real_distribution<double> u(-mag, mag);
  const double x = u(rng);
  return {x, u(rng)};
}

std::vector<Point2> uniform_square(std::mt19937_64& rng, int n, double side) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<Point2> out(n);
  for (Point2& p : out) {
    p.x = u(rng);
    p.y = u(rng);
  }
  return out;
}

ConvexPolygon random_body(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> rad(0.5, 1.0);
  for (;;) {
    std::vector<Point2> pts;
    for (int i = 0; i < 9; ++i) {
      const double a = ang(rng), r = rad(rng);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    ConvexPolygon c = ConvexPolygon::hull_of(pts);
    if (c.size() >= 4 && fatness(c).alpha < 3.0) return c;
  }
}

}  // namespace

InstanceSpec parse_family(const std::string& family) {
  InstanceSpec s;
  const auto open = family.find('(');
  s.family = family.substr(0, open);
  std::vector<double> p;
  if (open != std::string::npos) {
    if (family.back() != ')') throw std::invalid_argument("unbalanced family '" + family + "'");
    p = parse_params(family.substr(open + 1, family.size() - open - 2));
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) {
      throw std::invalid_argument("wrong parameter count for '" + s.family + "'");
    }
  };
  if (s.family == "udg-uniform" || s.family == "translates" || s.family == "intervals" ||
      s.family == "squares" || s.family == "rects-mixed") {
    arity(0, 0);
  } else if (s.family == "fat-rects") {
    arity(0, 1);
    if (!p.empty()) s.alpha = p[0];
  } else if (s.family == "fat-polygons") {
    arity(0, 2);
    if (!p.empty()) s.k = static_cast<int>(p[0]);
    if (p.size() > 1) s.alpha = p[1];
    if (s.k < 3 || s.k != p.front()) throw std::invalid_argument("fat-polygons needs an integer k >= 3");
  } else if (s.family == "F") {
    arity(1, 1);
    s.h = static_cast<int>(p[0]);
    if (s.h != p[0]) throw std::invalid_argument("F(h) needs an integer h");
  } else {
    throw std::invalid_argument("unknown family '" + s.family + "'");
  }
  return s;
}

Instance generate(const InstanceSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
  Instance inst;
  inst.spec = spec;
  Geometry& g = inst.geometry;
  std::mt19937_64 rng(spec.seed);
  std::mt19937_64 jit(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = spec.n;
  const double p = spec.perturb;

  if (spec.family == "udg-uniform") {
    g.type = "disks";
    for (Point2 c : uniform_square(rng, n, std::sqrt(n / spec.density))) {
      g.items.push_back(UnitDiskCenter{c + jitter(jit, p)});
    }
  } else if (spec.family == "translates") {
    g.type = "translates";
    auto body = std::make_shared<const ConvexPolygon>(random_body(rng));
    g.bodies.push_back(body);
    // Bodies have diameter about 2, so scale the region to keep density.
    for (Point2 c : uniform_square(rng, n, 2.0 * std::sqrt(n / spec.density))) {
      g.items.push_back(Translate{body, 0, c + jitter(jit, p)});
    }
  } else if (spec.family == "intervals") {
    g.type = "intervals";
    std::exponential_distribution<double> len(0.5);
    for (int i = 0; i < n; ++i) {
      const double lo = u(rng) * n / 2.0 + jitter(jit, p).x;
      g.items.push_back(Interval{lo, lo + len(rng)});
    }
  } else if (spec.family == "squares") {
    g.type = "rects";
    for (Point2 c : uniform_square(rng, n, std::sqrt(n / 5.0))) {
      c = c + jitter(jit, p);
      g.items.push_back(make_rect(c.x, c.x + 1, c.y, c.y + 1));
    }
  } else if (spec.family == "fat-rects") {
    g.type = "rects";
    const double alpha = spec.alpha > 0 ? spec.alpha : 2.0;
    if (alpha < std::sqrt(2.0)) throw std::invalid_argument("fat-rects needs alpha >= sqrt(2)");
    const double max_aspect = std::sqrt(alpha * alpha - 1.0);
    for (Point2 c : uniform_square(rng, n, std::sqrt(n / 5.0) * (1 + max_aspect) / 2)) {
      const double w = 0.5 + u(rng);
      const double h = w * (1.0 + u(rng) * (max_aspect - 1.0));
      const bool tall = u(rng) < 0.5;
      c = c + jitter(jit, p);
      g.items.push_back(tall ? make_rect(c.x, c.x + w, c.y, c.y + h)
                             : make_rect(c.x, c.x + h, c.y, c.y + w));
    }
  } else if (spec.family == "rects-mixed") {
    g.type = "rects";
    const double side = std::sqrt(static_cast<double>(n)) * 1.5;
    for (Point2 c : uniform_square(rng, n, side)) {
      const double w = 0.1 * std::exp(4.0 * u(rng));
      const double h = 0.1 * std::exp(4.0 * u(rng));
      c = c + jitter(jit, p);
      g.items.push_back(make_rect(c.x - w / 2, c.x + w / 2, c.y - h / 2, c.y + h / 2));
    }
  } else if (spec.family == "fat-polygons") {
    g.type = "polygons";
    const double regular = 1.0 / std::cos(std::numbers::pi / spec.k);
    const double alpha = spec.alpha > 0 ? spec.alpha : std::max(1.2, regular);
    if (alpha < regular - 1e-12) {
      throw std::invalid_argument("alpha below the fatness of a regular k-gon");
    }
    // Stretching by s along one axis multiplies fatness by at most s.
    const double max_stretch = alpha / regular;
    const double side = std::sqrt(static_cast<double>(n)) * 1.6;
    for (int i = 0; i < n; ++i) {
      const double r = 0.4 + u(rng) * 1.2;
      const double s = 1.0 + u(rng) * (max_stretch - 1.0);
      const double th = u(rng) * std::numbers::pi;
      const double phase = u(rng) * 2 * std::numbers::pi;
      Point2 c{u(rng) * side, u(rng) * side};
      c = c + jitter(jit, p);
      const double ct = std::cos(th), st = std::sin(th);
      // R(th) diag(s, 1) R(-th)
      const double m[4] = {ct * ct * s + st * st, ct * st * (s - 1),
                           ct * st * (s - 1), st * st * s + ct * ct};
      g.items.push_back(ConvexPolygon::regular(spec.k, r, {}, phase).transformed(m).translated(c));
    }
  } else if (spec.family == "F") {
    g.type = "polygons";
    inst.realization = realize_F(spec.h, ConvexPolygon::from_rect(make_rect(0, 1, 0, 1)));
    for (int v = 0; v < static_cast<int>(inst.realization->placements.size()); ++v) {
      g.items.push_back(inst.realization->body(v));
    }
    inst.spec.n = static_cast<int>(g.items.size());
  } else {
    throw std::invalid_argument("unknown family '" + spec.family + "'");
  }
  return inst;
}

std::string family_type(const std::string& family) {
  if (family == "udg-uniform") return "disks";
  if (family == "translates" || family == "intervals") return family;
  if (family == "squares" || family == "fat-rects" || family == "rects-mixed") return "rects";
  if (family == "fat-polygons") return "polygons";
  if (family == "F") return "polygons";
  throw std::invalid_argument("unknown family '" + family + "'");
}

IntersectionGraph geometry_graph(const Geometry& g) { return build_intersection_graph(g.items); }

IntersectionGraph instance_graph(const Instance& inst) {
  if (inst.realization) return realization_graph(*inst.realization);
  return geometry_graph(inst.geometry);
}

std::vector<std::string> constructions_for(const Geometry& g) {
  std::vector<std::string> out;
  if (g.type == "disks") out = {"udg_2hop"};
  if (g.type == "translates") out = {"translates_2hop"};
  if (g.type == "intervals") out = {"interval_2hop"};
  if (g.type == "rects") out = {"fat_rect_2hop", "rect_3hop"};
  if (g.type == "polygons") out = {"fat_convex_3hop"};
  out.push_back("greedy");
  out.push_back("full");
  return out;
}

std::string default_construction(const Geometry& g) { return constructions_for(g).front(); }

std::string default_construction(const InstanceSpec& spec) {
  if (spec.family == "F") return "greedy";
  return default_construction(Geometry{family_type(spec.family), {}, {}});
}

int construction_hops(const std::string& c) {
  if (c == "rect_3hop" || c == "fat_convex_3hop") return 3;
  if (c == "full") return 1;
  return 2;
}

Spanner build_spanner(const Geometry& g, const IntersectionGraph& graph,
                      const std::string& construction, int greedy_t) {
  if (construction == "greedy") return greedy_spanner(graph, greedy_t);
  if (construction == "full") return as_spanner(graph);
  const auto ok = constructions_for(g);
  if (std::find(ok.begin(), ok.end(), construction) == ok.end()) {
    throw std::invalid_argument("construction '" + construction + "' does not apply to " + g.type);
  }
  auto collect = [&](auto tag) {
    using T = decltype(tag);
    std::vector<T> v;
    v.reserve(g.items.size());
    for (const GeomObject& o : g.items) v.push_back(std::get<T>(o));
    return v;
  };
  if (construction == "udg_2hop") {
    std::vector<Point2> pts;
    for (const GeomObject& o : g.items) pts.push_back(std::get<UnitDiskCenter>(o).center);
    return udg_2hop(pts);
  }
  if (construction == "translates_2hop") {
    std::vector<Point2> offs;
    for (const GeomObject& o : g.items) {
      const Translate& t = std::get<Translate>(o);
      if (t.body_id != 0) throw std::invalid_argument("translates_2hop needs a single body");
      offs.push_back(t.offset);
    }
    if (g.bodies.empty()) return Spanner{static_cast<int>(g.items.size()), 2, {}, {}};
    return translates_2hop(*g.bodies.front(), offs);
  }
  if (construction == "interval_2hop") return interval_2hop(collect(Interval{}));
  if (construction == "fat_rect_2hop") return fat_rect_2hop(collect(AxisRect{}));
  if (construction == "rect_3hop") return rect_3hop(collect(AxisRect{}));
  return fat_convex_3hop(collect(ConvexPolygon{}));
}

double geometry_alpha(const Geometry& g) {
  double a = 1.0;
  for (const GeomObject& o : g.items) {
    if (const auto* r = std::get_if<AxisRect>(&o)) a = std::max(a, rect_fatness(*r));
    if (const auto* p = std::get_if<ConvexPolygon>(&o)) a = std::max(a, fatness(*p).alpha);
  }
  return a;
}

std::string bound_expression(const std::string& c) {
  if (c == "udg_2hop" || c == "translates_2hop" || c == "interval_2hop") return "n";
  if (c == "fat_rect_2hop") return "alpha^2*n*log2(n)";
  if (c == "fat_convex_3hop") return "alpha^3*n*log2(n)";
  if (c == "rect_3hop") return "n*log2(n)^2";
  return "n^2/2";
}

double bound_value(const std::string& c, int n, double alpha) {
  const double nn = std::max(n, 2);
  const double lg = std::log2(nn);
  if (c == "udg_2hop" || c == "translates_2hop" || c == "interval_2hop") return nn;
  if (c == "fat_rect_2hop") return alpha * alpha * nn * lg;
  if (c == "fat_convex_3hop") return alpha * alpha * alpha * nn * lg;
  if (c == "rect_3hop") return nn * lg * lg;
  return nn * nn / 2;
}

std::string family_label(const InstanceSpec& spec) {
  std::ostringstream o;
  o << spec.family;
  if (spec.family == "F") o << '(' << spec.h << ')';
  if (spec.family == "fat-rects" && spec.alpha > 0) o << '(' << spec.alpha << ')';
  if (spec.family == "fat-polygons") {
    o << '(' << spec.k;
    if (spec.alpha > 0) o << ',' << spec.alpha;
    o << ')';
  }
  return o.str();
}

BenchRecord bench(const InstanceSpec& spec, const std::string& construction, int greedy_t) {
  using clock = std::chrono::steady_clock;
  const Instance inst = generate(spec);
  const IntersectionGraph graph = instance_graph(inst);
  BenchRecord r;
  r.family = family_label(spec);
  r.n = graph.n();
  r.seed = spec.seed;
  r.construction = construction;
  r.t = construction == "greedy" ? greedy_t : construction_hops(construction);

  const auto t0 = clock::now();
  const Spanner s = build_spanner(inst.geometry, graph, construction, greedy_t);
  const auto t1 = clock::now();
  r.verified = verify_hop_spanner(graph, s, r.t).valid;
  const auto t2 = clock::now();

  r.edges = s.size();
  r.bound = bound_expression(construction);
  r.ratio = static_cast<double>(r.edges) / bound_value(construction, r.n, geometry_alpha(inst.geometry));
  r.build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.verify_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return r;
}

std::string csv_header() {
  return "family,n,seed,construction,t,edges,bound,ratio,build_ms,verify_ms,verified";
}

std::string csv_row(const BenchRecord& r) {
  std::ostringstream o;
  // Families with parameters contain commas.
  const bool quote = r.family.find(',') != std::string::npos;
  o << (quote ? "\"" + r.family + "\"" : r.family) << ',' << r.n << ',' << r.seed << ','
    << r.construction << ',' << r.t << ',' << r.edges << ',' << r.bound << ','
    << std::setprecision(6) << r.ratio << ',' << std::fixed << std::setprecision(2) << r.build_ms
    << ',' << r.verify_ms << ',' << (r.verified ? "true" : "false");
  return o.str();
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t m = std::min(xs.size(), ys.size());
  if (m < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

}  // namespace hopspan
