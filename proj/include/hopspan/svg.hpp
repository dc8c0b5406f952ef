#pragma once

#include <span>
#include <string>

#include "hopspan/graph.hpp"

namespace hopspan {

struct SvgOptions {
  double width = 800.0;
  double margin = 0.05;  ///< fraction of the larger extent
};

/// Objects as outlines, spanner edges as centroid-to-centroid segments
/// colored by provenance label. Output is byte-identical for equal input.
std::string render_svg(std::span<const GeomObject> objects, const Spanner* spanner = nullptr,
                       const SvgOptions& opt = {});

}  // namespace hopspan
