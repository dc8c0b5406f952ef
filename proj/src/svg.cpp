#include "hopspan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

namespace hopspan {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, y1, scale;
  double x(double v) const { return (v - x0) * scale; }
  double y(double v) const { return (y1 - v) * scale; }  // y up
};

// Intervals stacked in first-fit lanes so overlaps stay visible.
std::vector<int> interval_lanes(std::span<const GeomObject> objects) {
  std::vector<int> order, lane(objects.size(), 0);
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
    if (std::holds_alternative<Interval>(objects[i])) order.push_back(i);
  }
  auto lo = [&](int i) { return std::get<Interval>(objects[i]).lo; };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lo(a) < lo(b); });
  std::vector<double> end;
  for (int i : order) {
    const Interval& s = std::get<Interval>(objects[i]);
    int l = 0;
    while (l < static_cast<int>(end.size()) && end[l] >= s.lo) ++l;
    if (l == static_cast<int>(end.size())) end.push_back(0);
    end[l] = s.hi;
    lane[i] = l;
  }
  return lane;
}

constexpr double kLaneGap = 0.25;

}  // namespace

std::string render_svg(std::span<const GeomObject> objects, const Spanner* spanner,
                       const SvgOptions& opt) {
  const std::vector<int> lane = interval_lanes(objects);
  std::vector<Point2> anchor(objects.size());
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    AxisRect b;
    if (const auto* s = std::get_if<Interval>(&objects[i])) {
      const double y = lane[i] * kLaneGap;
      b = {s->lo, s->hi, y, y};
      anchor[i] = {(s->lo + s->hi) / 2, y};
    } else if (const auto* d = std::get_if<UnitDiskCenter>(&objects[i])) {
      b = {d->center.x - 0.5, d->center.x + 0.5, d->center.y - 0.5, d->center.y + 0.5};
      anchor[i] = d->center;
    } else if (const auto* r = std::get_if<AxisRect>(&objects[i])) {
      b = *r;
      anchor[i] = {(r->x_lo + r->x_hi) / 2, (r->y_lo + r->y_hi) / 2};
    } else if (const auto* p = std::get_if<ConvexPolygon>(&objects[i])) {
      b = p->bounding_box();
      anchor[i] = p->size() ? p->centroid() : Point2{};
    } else {
      const ConvexPolygon q = std::get<Translate>(objects[i]).placed();
      b = q.bounding_box();
      anchor[i] = q.centroid();
    }
    x0 = std::min(x0, b.x_lo);
    x1 = std::max(x1, b.x_hi);
    y0 = std::min(y0, b.y_lo);
    y1 = std::max(y1, b.y_hi);
  }
  if (objects.empty()) x0 = y0 = 0, x1 = y1 = 1;
  const double extent = std::max({x1 - x0, y1 - y0, 1e-9});
  const double pad = extent * opt.margin;
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const Frame f{x0, y1, opt.width / std::max(x1 - x0, 1e-9)};
  const double height = (y1 - y0) * f.scale;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(opt.width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(opt.width) + " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g id=\"objects\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const GeomObject& o = objects[i];
    if (const auto* s = std::get_if<Interval>(&o)) {
      out += "<line x1=\"" + num(f.x(s->lo)) + "\" y1=\"" + num(f.y(anchor[i].y)) + "\" x2=\"" +
             num(f.x(s->hi)) + "\" y2=\"" + num(f.y(anchor[i].y)) + "\"/>\n";
    } else if (const auto* d = std::get_if<UnitDiskCenter>(&o)) {
      out += "<circle cx=\"" + num(f.x(d->center.x)) + "\" cy=\"" + num(f.y(d->center.y)) +
             "\" r=\"" + num(0.5 * f.scale) + "\"/>\n";
    } else if (const auto* r = std::get_if<AxisRect>(&o)) {
      out += "<rect x=\"" + num(f.x(r->x_lo)) + "\" y=\"" + num(f.y(r->y_hi)) + "\" width=\"" +
             num(r->width() * f.scale) + "\" height=\"" + num(r->height() * f.scale) + "\"/>\n";
    } else {
      const ConvexPolygon q = std::holds_alternative<ConvexPolygon>(o)
                                  ? std::get<ConvexPolygon>(o)
                                  : std::get<Translate>(o).placed();
      out += "<polygon points=\"";
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (k) out += ' ';
        out += num(f.x(q[k].x)) + "," + num(f.y(q[k].y));
      }
      out += "\"/>\n";
    }
  }
  out += "</g>\n";

  if (spanner) {
    std::set<std::string> labels;
    for (std::size_t e = 0; e < spanner->edges.size(); ++e) {
      labels.insert(e < spanner->provenance.size() ? spanner->provenance[e] : "");
    }
    std::map<std::string, const char*> color;
    int next = 0;
    for (const std::string& l : labels) color[l] = kPalette[next++ % std::size(kPalette)];

    out += "<g id=\"edges\" stroke-width=\"1.5\">\n";
    for (std::size_t e = 0; e < spanner->edges.size(); ++e) {
      const auto [u, v] = spanner->edges[e];
      if (u < 0 || v < 0 || u >= static_cast<int>(anchor.size()) ||
          v >= static_cast<int>(anchor.size())) {
        continue;
      }
      const std::string& l = e < spanner->provenance.size() ? spanner->provenance[e] : "";
      out += "<line x1=\"" + num(f.x(anchor[u].x)) + "\" y1=\"" + num(f.y(anchor[u].y)) +
             "\" x2=\"" + num(f.x(anchor[v].x)) + "\" y2=\"" + num(f.y(anchor[v].y)) +
             "\" stroke=\"" + color[l] + "\"/>\n";
    }
    out += "</g>\n";
    out += "<g id=\"legend\" font-family=\"monospace\" font-size=\"12\">\n";
    int row = 0;
    for (const std::string& l : labels) {
      const double y = 16.0 + 14.0 * row++;
      out += "<text x=\"8\" y=\"" + num(y) + "\" fill=\"" + color[l] + "\">" +
             escape(l.empty() ? "(unlabeled)" : l) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hopspan
