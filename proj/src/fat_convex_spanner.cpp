#include "hopspan/fat_convex_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hopspan/interval_spanner.hpp"

namespace hopspan {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Interval stars over the slices of `ids` along the line y.
std::vector<Edge> line_stars(std::span<const int> ids, double y,
                             std::span<const ConvexPolygon> bodies) {
  std::vector<int> kept;
  std::vector<Interval> proj;
  for (int i : ids) {
    if (auto s = slice_at_y(bodies[i], y)) {
      kept.push_back(i);
      proj.push_back({s->first, s->second});
    }
  }
  std::vector<Edge> out;
  for (auto [c, s] : interval_star_edges(proj)) out.push_back({kept[c], kept[s]});
  return out;
}

std::vector<int> distinct_centers(const CenterSets& cs) {
  std::vector<int> out = cs.c;
  out.insert(out.end(), cs.c_prime.begin(), cs.c_prime.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SlabView::SlabView(double b, double t, std::span<const ConvexPolygon> bodies)
    : b_(b), t_(t), bodies_(bodies), clipped_(bodies.size()) {}

const ConvexPolygon& SlabView::clipped(int i) const {
  auto& slot = clipped_[static_cast<std::size_t>(i)];
  if (!slot) {
    auto c = clip_to_slab(bodies_[i], b_, t_);
    slot = std::make_unique<ConvexPolygon>(c ? std::move(*c) : ConvexPolygon{});
  }
  return *slot;
}

bool SlabView::meet(int i, int j) const {
  if (i == j) return clipped(i).size() > 0;
  const ConvexPolygon& a = clipped(i);
  const ConvexPolygon& b = clipped(j);
  if (a.size() == 0 || b.size() == 0) return false;
  return polygons_intersect(a, b);
}

bool SlabView::slices_meet(int i, int j, double y) const {
  const auto a = slice_at_y(bodies_[i], y);
  const auto b = slice_at_y(bodies_[j], y);
  return a && b && a->first <= b->second && b->first <= a->second;
}

bool SlabView::meet_off_bottom(int i, int j) const {
  return meet(i, j) && !slices_meet(i, j, b_);
}

bool SlabView::meet_off_top(int i, int j) const {
  return meet(i, j) && !slices_meet(i, j, t_);
}

double SlabView::min_x_on_bottom(int i) const {
  const auto s = slice_at_y(bodies_[i], b_);
  if (!s) throw GeometryError("body misses the bottom line");
  return s->first;
}

std::vector<int> rank_order(const SlabView& view, std::span<const int> across) {
  std::vector<std::pair<double, int>> keyed;
  keyed.reserve(across.size());
  for (int i : across) keyed.push_back({view.min_x_on_bottom(i), i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  out.reserve(keyed.size());
  for (auto [x, i] : keyed) out.push_back(i);
  return out;
}

CenterSets greedy_centers(const SlabView& view, std::span<const int> by_rank) {
  CenterSets cs;
  const int m = static_cast<int>(by_rank.size());
  if (m == 0) return cs;
  // reach[r]: highest rank meeting the body of rank r (itself included).
  std::vector<int> reach(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    reach[r] = r;
    for (int q = m - 1; q > r; --q) {
      if (view.meet(by_rank[r], by_rank[q])) {
        reach[r] = q;
        break;
      }
    }
  }
  int ck = 0, scanned = 0, best = 0;
  cs.c.push_back(by_rank[0]);
  while (ck < m - 1) {
    for (; scanned <= ck; ++scanned) best = std::max(best, reach[scanned]);
    if (best <= ck) throw std::logic_error("greedy_centers: component is not connected");
    const int next = best;
    int prime = -1;
    for (int r = ck; r >= 0; --r) {
      if (view.meet(by_rank[r], by_rank[next])) {
        prime = r;
        break;
      }
    }
    cs.c_prime.push_back(by_rank[prime]);
    cs.c.push_back(by_rank[next]);
    ck = next;
  }
  return cs;
}

std::vector<std::vector<int>> across_components(const SlabView& view,
                                                std::span<const int> ranked) {
  const std::size_t m = ranked.size();
  DisjointSets ds(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (ds.find(static_cast<int>(i)) == ds.find(static_cast<int>(j))) continue;
      if (view.meet(ranked[i], ranked[j])) {
        ds.unite(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::map<int, std::size_t> slot;
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, fresh] = slot.emplace(ds.find(static_cast<int>(i)), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(ranked[i]);
  }
  return out;
}

FatNodeResult fat_node_spanner(const SlabNode& node,
                               std::span<const ConvexPolygon> bodies) {
  FatNodeResult r;
  const auto& cls = node.classes;
  r.bottom = line_stars(cls.bottom, node.b, bodies);
  r.top = line_stars(cls.top, node.t, bodies);
  if (cls.across.empty()) return r;

  const SlabView view(node.b, node.t, bodies);
  r.components = across_components(view, rank_order(view, cls.across));

  // Per component: each distinct center with its star neighbours in rank order.
  std::vector<std::vector<std::pair<int, std::vector<int>>>> stars;
  for (const auto& comp : r.components) {
    r.centers.push_back(greedy_centers(view, comp));
    auto& list = stars.emplace_back();
    for (int c : distinct_centers(r.centers.back())) {
      std::vector<int> nbrs;
      for (int a : comp) {
        if (a != c && view.meet(c, a)) {
          nbrs.push_back(a);
          r.stars.push_back(make_edge(c, a));
        }
      }
      list.push_back({c, std::move(nbrs)});
    }
  }
  std::sort(r.stars.begin(), r.stars.end());
  r.stars.erase(std::unique(r.stars.begin(), r.stars.end()), r.stars.end());

  enum class Mode { kInside, kBottom, kTop };
  auto attach = [&](int s, Mode mode) {
    auto ok = [&](int x) {
      switch (mode) {
        case Mode::kInside: return view.meet(s, x);
        case Mode::kBottom: return view.meet_off_bottom(s, x);
        case Mode::kTop: return view.meet_off_top(s, x);
      }
      return false;
    };
    for (const auto& list : stars) {
      for (const auto& [c, nbrs] : list) {
        if (view.meet(s, c)) {
          // Meeting on the boundary line is already served by H_B / H_T.
          if (ok(c)) r.augmented.push_back(make_edge(s, c));
          continue;
        }
        for (int a : nbrs) {
          if (ok(a)) {
            r.augmented.push_back(make_edge(s, a));
            break;
          }
        }
      }
    }
  };
  for (int s : cls.inside) attach(s, Mode::kInside);
  auto across = [&](int i) {
    return std::binary_search(cls.across.begin(), cls.across.end(), i);
  };
  for (int s : cls.bottom) {
    if (!across(s)) attach(s, Mode::kBottom);
  }
  for (int s : cls.top) {
    if (!across(s)) attach(s, Mode::kTop);
  }
  std::sort(r.augmented.begin(), r.augmented.end());
  r.augmented.erase(std::unique(r.augmented.begin(), r.augmented.end()),
                    r.augmented.end());
  return r;
}

namespace {

FatNodeCheck audit_node(const SlabNode& node, const FatNodeResult& r,
                        std::span<const ConvexPolygon> bodies,
                        const std::vector<double>& alpha, bool betweenness) {
  FatNodeCheck ck;
  ck.node = node.id;
  ck.members = node.members.size();
  ck.min_inscribed_ratio = std::numeric_limits<double>::infinity();
  const SlabView view(node.b, node.t, bodies);
  const double h = node.t - node.b;

  for (std::size_t ci = 0; ci < r.components.size(); ++ci) {
    const auto& comp = r.components[ci];
    const CenterSets& cs = r.centers[ci];
    const std::vector<int> centers = distinct_centers(cs);

    for (std::size_t k = 0; k < cs.c_prime.size(); ++k) {
      if (!view.meet(cs.c_prime[k], cs.c[k])) ck.adjacent_ok = false;
    }
    auto touches = [&](int a, int c) { return a == c || view.meet(a, c); };
    for (int a : comp) {
      bool covered = false;
      for (int c : centers) covered = covered || touches(a, c);
      if (!covered) ck.coverage_ok = false;
      auto incidence = [&](const std::vector<int>& set) {
        std::vector<int> u = set;
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        int n = 0;
        for (int c : u) n += touches(a, c);
        return n;
      };
      ck.max_c_incidence = std::max(ck.max_c_incidence, incidence(cs.c));
      ck.max_c_prime_incidence =
          std::max(ck.max_c_prime_incidence, incidence(cs.c_prime));

      // Slabs thinner than the clipping tolerance have no usable interior.
      if (view.clipped(a).is_degenerate()) {
        ++ck.inscribed_skipped;
        continue;
      }
      const Circle in = max_inscribed_circle(view.clipped(a));
      ck.min_inscribed_ratio =
          std::min(ck.min_inscribed_ratio, 2.0 * in.radius * alpha[a] / h);
    }

    auto class_disjoint = [&](const std::vector<int>& set) {
      for (int parity = 0; parity < 2; ++parity) {
        for (std::size_t i = parity; i < set.size(); i += 2) {
          for (std::size_t j = i + 2; j < set.size(); j += 2) {
            if (set[i] != set[j] && view.meet(set[i], set[j])) return false;
          }
        }
      }
      return true;
    };
    if (!class_disjoint(cs.c) || !class_disjoint(cs.c_prime)) {
      ck.four_class_ok = false;
    }

    // Hop distances inside the star graph restricted to this component.
    std::map<int, int> local;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    for (auto [u, v] : r.stars) {
      auto iu = local.find(u), iv = local.find(v);
      if (iu == local.end() || iv == local.end()) continue;
      adj[iu->second].push_back(iv->second);
      adj[iv->second].push_back(iu->second);
    }
    for (std::size_t i = 0; i < comp.size() && ck.across_3hop_ok; ++i) {
      std::vector<int> d(comp.size(), -1);
      std::vector<int> frontier{static_cast<int>(i)};
      d[i] = 0;
      for (int step = 1; step <= 3 && !frontier.empty(); ++step) {
        std::vector<int> next;
        for (int x : frontier) {
          for (int y : adj[x]) {
            if (d[y] < 0) {
              d[y] = step;
              next.push_back(y);
            }
          }
        }
        frontier = std::move(next);
      }
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (d[j] < 0 && view.meet(comp[i], comp[j])) {
          ck.across_3hop_ok = false;
          break;
        }
      }
    }

    if (betweenness) {
      // rank(l) < rank(m) < rank(r), l meets r  =>  m meets l or r.
      const std::size_t m = comp.size();
      for (std::size_t l = 0; l < m && ck.betweenness_ok; ++l) {
        for (std::size_t rr = l + 2; rr < m && ck.betweenness_ok; ++rr) {
          if (!view.meet(comp[l], comp[rr])) continue;
          for (std::size_t mid = l + 1; mid < rr; ++mid) {
            if (!view.meet(comp[mid], comp[l]) && !view.meet(comp[mid], comp[rr])) {
              ck.betweenness_ok = false;
              break;
            }
          }
        }
      }
    }
  }
  return ck;
}

}  // namespace

std::vector<Point2> body_representatives(std::span<const ConvexPolygon> bodies) {
  std::vector<GeomObject> objs(bodies.begin(), bodies.end());
  const IntersectionGraph g = build_intersection_graph(std::move(objs));
  std::vector<Point2> reps;
  reps.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) {
    const ConvexPolygon& a = bodies[u];
    const ConvexPolygon& b = bodies[v];
    const auto common = intersect_convex(a, b);
    if (!common) throw GeometryError("intersecting bodies with empty intersection");
    // The point must sit on a line where both slices overlap in floating
    // point, or the line-restricted spanner there will miss the pair.
    const AxisRect cb = common->bounding_box();
    const double y_lo = std::max(a.bounding_box().y_lo, b.bounding_box().y_lo);
    const double y_hi = std::min(a.bounding_box().y_hi, b.bounding_box().y_hi);
    std::vector<double> ys = {0.5 * (cb.y_lo + cb.y_hi)};
    for (const auto* body : {&a, &b}) {
      for (const Point2& p : body->vertices()) ys.push_back(p.y);
    }
    ys.push_back(cb.y_lo);
    std::optional<Point2> found;
    for (double y : ys) {
      if (y < y_lo || y > y_hi) continue;
      const auto sa = slice_at_y(a, y);
      const auto sb = slice_at_y(b, y);
      if (sa && sb && sa->first <= sb->second && sb->first <= sa->second) {
        found = Point2{std::max(sa->first, sb->first), y};
        break;
      }
    }
    reps.push_back(found ? *found : Point2{cb.x_lo, cb.y_lo});
  }
  return reps;
}

FatSpannerReport fat_convex_3hop_report(std::span<const ConvexPolygon> bodies,
                                        const FatOptions& opt) {
  FatSpannerReport rep;
  std::vector<AxisRect> boxes;
  boxes.reserve(bodies.size());
  std::vector<double> alpha;
  alpha.reserve(bodies.size());
  for (const ConvexPolygon& p : bodies) {
    boxes.push_back(p.bounding_box());
    alpha.push_back(fatness(p).alpha);
    rep.alpha = std::max(rep.alpha, alpha.back());
  }
  rep.tree = build_slab_tree(boxes, body_representatives(bodies));

  SpannerBuilder b(static_cast<int>(bodies.size()));
  for (const SlabNode& node : rep.tree.nodes()) {
    const FatNodeResult r = fat_node_spanner(node, bodies);
    for (auto [u, v] : r.bottom) b.add(u, v, "fat-convex:bottom");
    for (auto [u, v] : r.top) b.add(u, v, "fat-convex:top");
    for (auto [u, v] : r.stars) b.add(u, v, "fat-convex:center");
    for (auto [u, v] : r.augmented) b.add(u, v, "fat-convex:inside");
    if (opt.audit) {
      FatNodeCheck ck = audit_node(node, r, bodies, alpha, opt.check_betweenness);
      std::vector<Edge> all;
      for (const auto* part : {&r.bottom, &r.top, &r.stars, &r.augmented}) {
        for (auto [u, v] : *part) all.push_back(make_edge(u, v));
      }
      std::sort(all.begin(), all.end());
      ck.edges = static_cast<std::size_t>(std::unique(all.begin(), all.end()) -
                                          all.begin());
      rep.checks.push_back(ck);
    }
  }
  rep.spanner = b.build(3);
  return rep;
}

Spanner fat_convex_3hop(std::span<const ConvexPolygon> bodies) {
  return fat_convex_3hop_report(bodies).spanner;
}

}  // namespace hopspan
