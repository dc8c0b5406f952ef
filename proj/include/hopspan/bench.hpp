#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopspan/io.hpp"

namespace hopspan {

/// Instance family with its parameters. Families:
///   udg-uniform, translates, intervals, squares, fat-rects(alpha),
///   rects-mixed, fat-polygons(k, alpha), F(h)
struct InstanceSpec {
  std::string family = "udg-uniform";
  int n = 0;
  std::uint64_t seed = 1;
  double alpha = 0.0;    ///< 0: family default
  int k = 6;             ///< polygon corners
  int h = 2;             ///< F(h) depth
  double density = 2.0;  ///< expected points per unit area (udg-uniform, translates)
  double perturb = 0.0;  ///< uniform jitter applied to every object
};

/// Parses "name" or "name(p1,p2)"; flags passed separately fill the rest.
/// Throws std::invalid_argument for unknown families or bad parameters.
InstanceSpec parse_family(const std::string& family);
/// Inverse of parse_family for the parameters it sets.
std::string family_label(const InstanceSpec& spec);

struct Instance {
  InstanceSpec spec;
  Geometry geometry;
  std::optional<HomothetRealization> realization;  ///< F(h) only
};

Instance generate(const InstanceSpec& spec);
/// Geometry type a family generates (disks, rects, ...).
std::string family_type(const std::string& family);

/// Intersection graph of the instance. F(h) instances use the realization's
/// relative-tolerance predicate.
IntersectionGraph instance_graph(const Instance& inst);
IntersectionGraph geometry_graph(const Geometry& g);

/// Constructions that accept this geometry; "greedy" and "full" always apply.
std::vector<std::string> constructions_for(const Geometry& g);
std::string default_construction(const Geometry& g);
/// F(h) defaults to greedy: its homothets shrink below what the slab
/// constructions resolve.
std::string default_construction(const InstanceSpec& spec);
/// Hop bound the construction guarantees.
int construction_hops(const std::string& construction);

/// Builds the named spanner. greedy_t is used by "greedy" only.
Spanner build_spanner(const Geometry& g, const IntersectionGraph& graph,
                      const std::string& construction, int greedy_t = 2);

/// Largest fatness over rectangles or polygons (1 for other kinds).
double geometry_alpha(const Geometry& g);
std::string bound_expression(const std::string& construction);
double bound_value(const std::string& construction, int n, double alpha);

struct BenchRecord {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string construction;
  int t = 0;
  std::size_t edges = 0;
  std::string bound;
  double ratio = 0.0;
  double build_ms = 0.0;
  double verify_ms = 0.0;
  bool verified = false;
};

BenchRecord bench(const InstanceSpec& spec, const std::string& construction, int greedy_t = 2);

std::string csv_header();
std::string csv_row(const BenchRecord& r);

/// Least-squares slope of ys against xs; 0 for fewer than two points.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

inline const std::vector<int> kDefaultBenchSizes = {125, 250, 500, 1000, 2000, 4000};

}  // namespace hopspan
