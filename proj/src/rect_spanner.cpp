#include "hopspan/rect_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "hopspan/interval_spanner.hpp"

namespace hopspan {

namespace {

bool meets(const ExtendedInterval& it, double x_lo, double x_hi) {
  const bool left = it.closed_lo ? it.lo <= x_hi : it.lo < x_hi;
  return left && it.hi >= x_lo;
}

// Interval stars along a horizontal line over a subset of rectangles,
// mapped back to global indices.
std::vector<Edge> line_stars(std::span<const int> ids,
                             std::span<const AxisRect> rects) {
  std::vector<Interval> proj;
  proj.reserve(ids.size());
  for (int i : ids) proj.push_back({rects[i].x_lo, rects[i].x_hi});
  std::vector<Edge> out;
  for (auto [c, s] : interval_star_edges(proj)) out.push_back({ids[c], ids[s]});
  return out;
}

RectSpannerReport slab_spanner(std::span<const AxisRect> rects, InsideRule rule,
                               const std::string& name) {
  RectSpannerReport rep;
  rep.tree = build_slab_tree(rects);
  for (const AxisRect& r : rects) rep.alpha = std::max(rep.alpha, rect_fatness(r));
  SpannerBuilder b(static_cast<int>(rects.size()));
  for (const SlabNode& node : rep.tree.nodes()) {
    const NodeEdges e = rect_node_spanner(node, rects, rule);
    for (auto [u, v] : e.bottom) b.add(u, v, name + ":bottom");
    for (auto [u, v] : e.top) b.add(u, v, name + ":top");
    for (auto [u, v] : e.across) b.add(u, v, name + ":across");
    for (auto [u, v] : e.inside) b.add(u, v, name + ":inside");

    NodeAudit a;
    a.node = node.id;
    a.members = node.members.size();
    a.inside = node.classes.inside.size();
    a.bottom = node.classes.bottom.size();
    a.top = node.classes.top.size();
    a.across = node.classes.across.size();
    a.edges = e.distinct();
    a.max_inside_links = e.max_inside_links;
    const ExtendedIntervals ext = extended_intervals(node, rects);
    a.strips = ext.items.size();
    double w = std::numeric_limits<double>::infinity();
    for (int i : node.classes.across) w = std::min(w, rects[i].width());
    const auto& it = ext.items;
    for (std::size_t s = 0; s < it.size() && a.width_ok; ++s) {
      for (std::size_t k = 1; s + 2 * k - 1 < it.size(); ++k) {
        const double extent = it[s + 2 * k - 1].hi - it[s].lo;
        if (extent < static_cast<double>(k) * w - 1e-9) {
          a.width_ok = false;
          break;
        }
      }
    }
    rep.nodes.push_back(a);
  }
  rep.spanner = b.build(2);
  return rep;
}

}  // namespace

std::vector<int> ExtendedIntervals::hit(double x_lo, double x_hi) const {
  std::vector<int> out;
  auto first = std::lower_bound(
      items.begin(), items.end(), x_lo,
      [](const ExtendedInterval& it, double x) { return it.hi < x; });
  for (auto it = first; it != items.end(); ++it) {
    if (it->lo > x_hi) break;
    if (meets(*it, x_lo, x_hi)) {
      out.push_back(static_cast<int>(it - items.begin()));
    }
  }
  return out;
}

std::optional<int> ExtendedIntervals::locate(double x) const {
  const auto h = hit(x, x);
  if (h.empty()) return std::nullopt;
  return h.front();
}

ExtendedIntervals extended_intervals(const SlabNode& node,
                                     std::span<const AxisRect> rects) {
  ExtendedIntervals ext;
  ext.b = node.b;
  ext.t = node.t;
  const auto& across = node.classes.across;
  std::vector<Interval> proj;
  for (int i : across) proj.push_back({rects[i].x_lo, rects[i].x_hi});
  for (const IntervalPartition& part : greedy_partition(proj)) {
    const auto& p = part.breakpoints;
    for (std::size_t k = 1; k <= part.num_intervals(); ++k) {
      ext.items.push_back({p[k - 1], p[k], k == 1, across[part.covers[k - 1]]});
    }
  }
  std::sort(ext.items.begin(), ext.items.end(),
            [](const ExtendedInterval& a, const ExtendedInterval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.closed_lo > b.closed_lo);
            });
  return ext;
}

std::size_t NodeEdges::distinct() const {
  std::vector<Edge> all;
  for (const auto* part : {&bottom, &top, &across, &inside}) {
    for (auto [u, v] : *part) all.push_back(make_edge(u, v));
  }
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(
      std::unique(all.begin(), all.end()) - all.begin());
}

NodeEdges rect_node_spanner(const SlabNode& node,
                            std::span<const AxisRect> rects, InsideRule rule) {
  NodeEdges e;
  e.bottom = line_stars(node.classes.bottom, rects);
  e.top = line_stars(node.classes.top, rects);
  e.across = line_stars(node.classes.across, rects);
  if (node.classes.across.empty()) return e;

  const ExtendedIntervals ext = extended_intervals(node, rects);
  for (int s : node.classes.inside) {
    std::vector<int> strips;
    if (rule == InsideRule::kOverlap) {
      strips = ext.hit(rects[s].x_lo, rects[s].x_hi);
    } else {
      for (double x : {rects[s].x_lo, rects[s].x_hi}) {
        if (auto k = ext.locate(x)) strips.push_back(*k);
      }
      strips.erase(std::unique(strips.begin(), strips.end()), strips.end());
    }
    e.max_inside_links = std::max(e.max_inside_links, strips.size());
    for (int k : strips) e.inside.push_back({s, ext.items[k].cover});
  }
  return e;
}

double rect_fatness(const AxisRect& r) {
  const double lo = std::min(r.width(), r.height());
  const double hi = std::max(r.width(), r.height());
  if (lo <= 0) return std::numeric_limits<double>::infinity();
  return std::hypot(lo, hi) / lo;
}

RectSpannerReport fat_rect_2hop_report(std::span<const AxisRect> rects) {
  return slab_spanner(rects, InsideRule::kOverlap, "fat-rect");
}

Spanner fat_rect_2hop(std::span<const AxisRect> rects) {
  return fat_rect_2hop_report(rects).spanner;
}

IntersectionKind classify_intersection(const AxisRect& a, const AxisRect& b) {
  if (!rects_intersect(a, b)) return IntersectionKind::kNone;
  for (Point2 c : a.corners()) {
    if (b.contains(c)) return IntersectionKind::kCorner;
  }
  for (Point2 c : b.corners()) {
    if (a.contains(c)) return IntersectionKind::kCorner;
  }
  return IntersectionKind::kCrossing;
}

RectSpannerReport corner_2hop_report(std::span<const AxisRect> rects) {
  return slab_spanner(rects, InsideRule::kCorners, "corner");
}

Spanner corner_2hop(std::span<const AxisRect> rects) {
  return corner_2hop_report(rects).spanner;
}

std::size_t BicliqueCover::weight() const {
  std::size_t w = 0;
  for (const Grid& g : grids) w += g.a.size() + g.b.size();
  return w;
}

std::vector<int> BicliqueCover::memberships(int n) const {
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  for (const Grid& g : grids) {
    for (int i : g.a) ++m[i];
    for (int i : g.b) ++m[i];
  }
  return m;
}

std::vector<CompressedRect> compress(std::span<const AxisRect> rects) {
  const int n = static_cast<int>(rects.size());
  std::vector<CompressedRect> out(rects.size());
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<std::tuple<double, int, int>> ev;  // value, 0 = lo, index
    ev.reserve(2 * rects.size());
    for (int i = 0; i < n; ++i) {
      const AxisRect& r = rects[i];
      ev.emplace_back(axis == 0 ? r.x_lo : r.y_lo, 0, i);
      ev.emplace_back(axis == 0 ? r.x_hi : r.y_hi, 1, i);
    }
    std::sort(ev.begin(), ev.end());
    for (int rank = 0; rank < static_cast<int>(ev.size()); ++rank) {
      const auto [v, hi, i] = ev[rank];
      int* slot = axis == 0 ? (hi ? &out[i].x_hi : &out[i].x_lo)
                            : (hi ? &out[i].y_hi : &out[i].y_lo);
      *slot = rank;
    }
  }
  return out;
}

Streak maximal_streak(int s, int lo, int hi, int levels) {
  Streak cur{s, 0};
  while (cur.log_len < levels) {
    const int len = 2 << cur.log_len;
    const Streak parent{(s / len) * len, cur.log_len + 1};
    if (parent.start < lo || parent.end() > hi) break;
    cur = parent;
  }
  return cur;
}

BicliqueCover crossing_biclique_cover(std::span<const AxisRect> rects) {
  BicliqueCover cover;
  const int n = static_cast<int>(rects.size());
  while ((1 << cover.levels) < 2 * n) ++cover.levels;
  if (n == 0) return cover;
  const std::vector<CompressedRect> c = compress(rects);

  std::vector<GeomObject> objs(rects.begin(), rects.end());
  const IntersectionGraph g = build_intersection_graph(std::move(objs));
  std::map<std::pair<Streak, Streak>, std::size_t> index;
  for (auto [u, v] : g.edges()) {
    if (classify_intersection(rects[u], rects[v]) != IntersectionKind::kCrossing) {
      continue;
    }
    // a traverses b horizontally: b_x inside a_x.
    const bool u_wide = c[u].x_lo <= c[v].x_lo && c[v].x_hi <= c[u].x_hi;
    const int a = u_wide ? u : v;
    const int b = u_wide ? v : u;
    const int sx = c[b].x_lo, sy = c[a].y_lo;
    const Streak ix = maximal_streak(sx, c[a].x_lo, c[a].x_hi, cover.levels);
    const Streak iy = maximal_streak(sy, c[b].y_lo, c[b].y_hi, cover.levels);
    auto [it, fresh] = index.emplace(std::make_pair(ix, iy), cover.grids.size());
    if (fresh) cover.grids.push_back({ix, iy, {}, {}});
    cover.grids[it->second].a.push_back(a);
    cover.grids[it->second].b.push_back(b);
  }
  for (Grid& gr : cover.grids) {
    for (auto* side : {&gr.a, &gr.b}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
  }
  return cover;
}

std::vector<Edge> bistar(std::span<const int> a, std::span<const int> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("bistar of empty side");
  const int a0 = *std::min_element(a.begin(), a.end());
  const int b0 = *std::min_element(b.begin(), b.end());
  std::vector<Edge> out;
  for (int y : b) {
    if (y != a0) out.push_back(make_edge(a0, y));
  }
  for (int x : a) {
    if (x != a0 && x != b0) out.push_back(make_edge(b0, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Spanner rect_3hop(std::span<const AxisRect> rects) {
  const Spanner corner = corner_2hop(rects);
  SpannerBuilder b(static_cast<int>(rects.size()));
  for (std::size_t i = 0; i < corner.edges.size(); ++i) {
    b.add(corner.edges[i].first, corner.edges[i].second, corner.provenance[i]);
  }
  for (const Grid& g : crossing_biclique_cover(rects).grids) {
    for (auto [u, v] : bistar(g.a, g.b)) b.add(u, v, "bistar");
  }
  return b.build(3);
}

}  // namespace hopspan
