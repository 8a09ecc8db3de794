#include "ghyp/hyperbolicity.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <thread>

#include "ghyp/errors.hpp"
#include "ghyp/minors.hpp"

namespace ghyp {

namespace {

constexpr Len16 kUnit16 = 16;

Len16 abs16(Len16 v) { return v < 0 ? -v : v; }

Len16 d16(const MetricGraph& g, int u, int v) { return 2 * g.vdist8(u, v); }

// A piece of the far set: either a single point or a closed subinterval of
// one edge, in sixteenths.
struct Anchor {
  bool ival = false;
  GraphPoint pt;
  int e = -1;
  Len16 lo = 0, hi = 0;
};

void add_side_anchors(const GeodesicPath& s, std::vector<Anchor>& out) {
  if (s.segs.empty()) {
    Anchor a;
    a.pt = s.start;
    out.push_back(a);
    return;
  }
  for (const Seg& sg : s.segs) {
    Anchor a;
    a.ival = true;
    a.e = sg.e;
    a.lo = 2 * std::min(sg.from8, sg.to8);
    a.hi = 2 * std::max(sg.from8, sg.to8);
    out.push_back(a);
  }
}

// Exact distance from the point at offset x on edge h to the anchor.  All
// routes off the host edge pass through its endpoints; on a loop both
// offsets 0 and 16 are the single base vertex and direct arcs wrap.
Len16 anchor_dist(const MetricGraph& g, int h, Len16 x, const Anchor& an) {
  int va = g.edge_a(h), vb = g.edge_b(h);
  bool hloop = va == vb;
  auto via_exits = [&](Len16 cost_a, Len16 cost_b) {
    if (hloop) return std::min(x, kUnit16 - x) + cost_a;
    return std::min(x + cost_a, (kUnit16 - x) + cost_b);
  };
  if (!an.ival) {
    const GraphPoint& q = an.pt;
    if (q.kind == GraphPoint::Kind::Interior && q.id == h) {
      Len16 direct = abs16(x - 2 * q.off8);
      return hloop ? std::min(direct, kUnit16 - direct) : direct;
    }
    if (q.kind == GraphPoint::Kind::Vertex) return via_exits(d16(g, va, q.id), d16(g, vb, q.id));
    return via_exits(2 * point_distance(g, vertex_point(va), q),
                     2 * point_distance(g, vertex_point(vb), q));
  }
  if (an.e == h) {
    Len16 band = std::max<Len16>({0, an.lo - x, x - an.hi});
    if (!hloop) return band;
    return std::min({band, kUnit16 - abs16(x - an.lo), kUnit16 - abs16(x - an.hi)});
  }
  int vc = g.edge_a(an.e), vd = g.edge_b(an.e);
  auto vert_to_ival = [&](int v) {
    if (vc == vd) return d16(g, v, vc) + std::max<Len16>(0, std::min(an.lo, kUnit16 - an.hi));
    return std::min(d16(g, v, vc) + an.lo, d16(g, v, vd) + (kUnit16 - an.hi));
  };
  return via_exits(vert_to_ival(va), vert_to_ival(vb));
}

// Every breakpoint of the distance-to-far-set envelope along a side lies
// on the integer sixteenth grid (all constants are even sixteenths), so
// sampling each sixteenth is exact.
ThinnessResult thinness_impl(const MetricGraph& g, const GeodesicTriangle& t) {
  ThinnessResult best;
  Len16 top = -1;
  for (int s = 0; s < 3; ++s) {
    const GeodesicPath& side = t.side[s];
    if (side.segs.empty()) continue;  // single corner, on the far set
    std::vector<Anchor> anchors;
    add_side_anchors(t.side[(s + 1) % 3], anchors);
    add_side_anchors(t.side[(s + 2) % 3], anchors);
    Len16 along = 0;
    for (std::size_t si = 0; si < side.segs.size(); ++si) {
      const Seg& sg = side.segs[si];
      Len16 x0 = 2 * sg.from8, x1 = 2 * sg.to8;
      Len16 step = x1 > x0 ? 1 : -1;
      Len16 count = abs16(x1 - x0);
      for (Len16 i = (si == 0 ? 0 : 1); i <= count; ++i) {
        Len16 x = x0 + step * i;
        Len16 v = anchor_dist(g, sg.e, x, anchors[0]);
        for (std::size_t a = 1; a < anchors.size() && v > 0; ++a)
          v = std::min(v, anchor_dist(g, sg.e, x, anchors[a]));
        Len16 pos = along + i;
        if (v > top) {
          top = v;
          best.at = ThinnessWitness{s, pos};
        }
      }
      along += count;
    }
  }
  best.value16 = top < 0 ? 0 : top;
  return best;
}

}  // namespace

ThinnessResult triangle_thinness(const MetricGraph& g, const GeodesicTriangle& t) {
  for (int s = 0; s < 3; ++s) {
    const GeodesicPath& side = t.side[s];
    if (side.start != t.corner[s] || side.end != t.corner[(s + 1) % 3])
      fail(Errc::BadInput, "side " + std::to_string(s) + " does not run between its corners");
    Len8 sum = 0;
    for (const Seg& sg : side.segs) sum += sg.len8();
    if (sum != side.total_len8)
      fail(Errc::BadInput, "side " + std::to_string(s) + " length field disagrees with its segments");
    Len8 need = point_distance(g, side.start, side.end);
    if (side.total_len8 != need)
      fail(Errc::SideNotGeodesic, "side " + std::to_string(s) + " has length " +
                                      len8_str(side.total_len8) + " but its corners are at distance " +
                                      len8_str(need));
  }
  return thinness_impl(g, t);
}

namespace {

// Point set of a geodesic as shared-intersection data: visited vertices
// plus closed offset intervals per edge, in eighths.
struct PathSummary {
  std::vector<int> verts;
  std::vector<std::array<Len8, 3>> ivals;  // edge, lo, hi
};

PathSummary summarize(const MetricGraph& g, const GeodesicPath& p) {
  PathSummary s;
  if (p.segs.empty()) {
    if (p.start.kind == GraphPoint::Kind::Vertex)
      s.verts.push_back(p.start.id);
    else
      s.ivals.push_back({p.start.id, p.start.off8, p.start.off8});
    return s;
  }
  for (const Seg& sg : p.segs) {
    Len8 lo = std::min(sg.from8, sg.to8), hi = std::max(sg.from8, sg.to8);
    s.ivals.push_back({sg.e, lo, hi});
    if (lo == 0) s.verts.push_back(g.edge_a(sg.e));
    if (hi == kUnit8) s.verts.push_back(g.edge_b(sg.e));
  }
  std::sort(s.verts.begin(), s.verts.end());
  s.verts.erase(std::unique(s.verts.begin(), s.verts.end()), s.verts.end());
  return s;
}

// True when the two point sets meet in exactly the expected finite set.
bool isect_equals(const MetricGraph& g, const PathSummary& a, const PathSummary& b,
                  std::initializer_list<GraphPoint> expect) {
  std::set<GraphPoint> pts;
  for (int v : a.verts)
    if (std::binary_search(b.verts.begin(), b.verts.end(), v)) pts.insert(vertex_point(v));
  for (const auto& ia : a.ivals)
    for (const auto& ib : b.ivals) {
      if (ia[0] != ib[0]) continue;
      Len8 lo = std::max(ia[1], ib[1]), hi = std::min(ia[2], ib[2]);
      if (lo > hi) continue;
      if (lo < hi) return false;  // a whole subsegment is shared
      int e = static_cast<int>(ia[0]);
      if (lo == 0)
        pts.insert(vertex_point(g.edge_a(e)));
      else if (lo == kUnit8)
        pts.insert(vertex_point(g.edge_b(e)));
      else
        pts.insert(GraphPoint{GraphPoint::Kind::Interior, e, static_cast<std::int32_t>(lo)});
    }
  return pts == std::set<GraphPoint>(expect);
}

// The three sides trace a simple closed curve iff every pairwise
// intersection is exactly the shared corner set; with two equal corners
// the two nonempty sides must meet exactly in both corners.
bool forms_cycle(const MetricGraph& g, const GraphPoint c[3], const PathSummary& s0,
                 const PathSummary& s1, const PathSummary& s2) {
  bool e01 = c[0] == c[1], e12 = c[1] == c[2];
  if (e01 && e12) return false;
  if (c[0] == c[2] && !(e01 && e12)) return false;
  if (e01) return isect_equals(g, s1, s2, {c[1], c[2]});
  if (e12) return isect_equals(g, s0, s2, {c[0], c[1]});
  return isect_equals(g, s0, s1, {c[1]}) && isect_equals(g, s1, s2, {c[2]}) &&
         isect_equals(g, s2, s0, {c[0]});
}

struct Slot {
  Len16 best = -1;
  GeodesicTriangle tri;
  ThinnessWitness at;
  std::int64_t triples = 0;
  std::int64_t combos = 0;
};

}  // namespace

DeltaReport delta_exact(const MetricGraph& g, const EnumerationOptions& opts) {
  if (opts.geodesic_cap < 1) fail(Errc::BadInput, "geodesic cap must be positive");
  if (is_tree(g)) {
    DeltaReport rep;
    rep.method = DeltaMethod::Exact;
    return rep;
  }
  std::vector<GraphPoint> grid = grid_points(g, opts.resolution);
  int np = static_cast<int>(grid.size());
  auto pidx = [np](int i, int j) { return static_cast<std::size_t>(i) * np + j; };

  std::vector<GeodesicList> lists(static_cast<std::size_t>(np) * np);
  std::vector<std::vector<GeodesicPath>> revs(lists.size());
  std::vector<std::vector<PathSummary>> sums(lists.size());
  bool truncated = false;
  for (int i = 0; i < np; ++i)
    for (int j = i; j < np; ++j) {
      std::size_t id = pidx(i, j);
      lists[id] = enumerate_geodesics(g, grid[i], grid[j], opts.geodesic_cap);
      truncated = truncated || lists[id].truncated;
      for (const GeodesicPath& p : lists[id].paths) {
        revs[id].push_back(reversed(p));
        sums[id].push_back(summarize(g, p));
      }
    }

  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < np; ++i)
    for (int j = i; j < np; ++j)
      for (int k = j; k < np; ++k) triples.push_back({i, j, k});

  auto work = [&](std::size_t t_begin, std::size_t t_end, Slot& slot) {
    for (std::size_t ti = t_begin; ti < t_end; ++ti) {
      auto [i, j, k] = triples[ti];
      ++slot.triples;
      const GeodesicList& l01 = lists[pidx(i, j)];
      const GeodesicList& l12 = lists[pidx(j, k)];
      const GeodesicList& l02 = lists[pidx(i, k)];
      GeodesicTriangle tri;
      tri.corner[0] = grid[i];
      tri.corner[1] = grid[j];
      tri.corner[2] = grid[k];
      for (std::size_t a = 0; a < l01.paths.size(); ++a)
        for (std::size_t b = 0; b < l12.paths.size(); ++b)
          for (std::size_t c = 0; c < l02.paths.size(); ++c) {
            ++slot.combos;
            if (opts.cycle_prune &&
                !forms_cycle(g, tri.corner, sums[pidx(i, j)][a], sums[pidx(j, k)][b],
                             sums[pidx(i, k)][c]))
              continue;
            tri.side[0] = l01.paths[a];
            tri.side[1] = l12.paths[b];
            tri.side[2] = revs[pidx(i, k)][c];
            ThinnessResult th = thinness_impl(g, tri);
            if (th.value16 > slot.best) {
              slot.best = th.value16;
              slot.tri = tri;
              slot.at = th.at;
            }
          }
    }
  };

  int threads = std::max(1, opts.threads);
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(1, triples.size())));
  std::vector<Slot> slots(threads);
  if (threads == 1) {
    work(0, triples.size(), slots[0]);
  } else {
    std::vector<std::thread> pool;
    std::size_t total = triples.size();
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = total * t / threads, hi = total * (t + 1) / threads;
      pool.emplace_back(work, lo, hi, std::ref(slots[t]));
    }
    for (auto& th : pool) th.join();
  }

  DeltaReport rep;
  rep.method = DeltaMethod::Exact;
  rep.stats.truncated = truncated;
  Len16 best = -1;
  // Chunks are in ascending triple order, so taking only strict
  // improvements yields the first global maximum for any thread count.
  for (const Slot& s : slots) {
    rep.stats.triples += s.triples;
    rep.stats.combos += s.combos;
    if (s.best > best) {
      best = s.best;
      rep.witness = s.tri;
      rep.witness_point = s.at;
    }
  }
  rep.delta16 = best < 0 ? 0 : best;
  return rep;
}

namespace {

GraphPoint lift_point(const Block& blk, GraphPoint p) {
  if (p.kind == GraphPoint::Kind::Vertex) return vertex_point(blk.orig_vertex[p.id]);
  return GraphPoint{GraphPoint::Kind::Interior, blk.orig_edge[p.id], p.off8};
}

GeodesicPath lift_path(const Block& blk, const GeodesicPath& p) {
  GeodesicPath out;
  out.start = lift_point(blk, p.start);
  out.end = lift_point(blk, p.end);
  out.total_len8 = p.total_len8;
  for (const Seg& sg : p.segs)
    out.segs.push_back(Seg{blk.orig_edge[sg.e], sg.from8, sg.to8});
  return out;
}

}  // namespace

DeltaReport delta_via_blocks(const MetricGraph& g, const EnumerationOptions& opts) {
  TDecomposition dec = blocks(g);
  DeltaReport rep;
  rep.method = DeltaMethod::Blocks;
  for (const Block& blk : dec.blocks) {
    DeltaReport r = delta_exact(blk.graph, opts);
    rep.stats.triples += r.stats.triples;
    rep.stats.combos += r.stats.combos;
    rep.stats.truncated = rep.stats.truncated || r.stats.truncated;
    if (r.delta16 > rep.delta16 || (r.witness && !rep.witness && r.delta16 == rep.delta16)) {
      rep.delta16 = r.delta16;
      if (r.witness) {
        GeodesicTriangle tri;
        for (int s = 0; s < 3; ++s) {
          tri.corner[s] = lift_point(blk, r.witness->corner[s]);
          tri.side[s] = lift_path(blk, r.witness->side[s]);
        }
        rep.witness = tri;
        rep.witness_point = r.witness_point;
      }
    }
  }
  return rep;
}

DeltaReport delta_cactus(const MetricGraph& g) {
  CactusProfile prof = cactus_profile(g);
  if (!prof.is_cactus)
    fail(Errc::NotProperCycles,
         "two cycles share an edge; the circumference/4 formula does not apply");
  DeltaReport rep;
  rep.method = DeltaMethod::Cactus;
  rep.delta16 = prof.circumference ? 4 * static_cast<Len16>(*prof.circumference) : 0;
  return rep;
}

DeltaReport delta_four_point(const MetricGraph& g) {
  DeltaReport rep;
  rep.method = DeltaMethod::FourPoint;
  int n = g.n();
  Len16 best = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Len8 s1 = g.vdist8(a, b) + g.vdist8(c, d);
          Len8 s2 = g.vdist8(a, c) + g.vdist8(b, d);
          Len8 s3 = g.vdist8(a, d) + g.vdist8(b, c);
          Len8 largest = std::max({s1, s2, s3});
          Len8 smallest = std::min({s1, s2, s3});
          Len8 middle = s1 + s2 + s3 - largest - smallest;
          // (largest-middle)/2 in eighths is largest-middle in sixteenths
          best = std::max<Len16>(best, largest - middle);
        }
  rep.delta16 = best;
  return rep;
}

const char* method_name(DeltaMethod m) {
  switch (m) {
    case DeltaMethod::Exact: return "exact";
    case DeltaMethod::Blocks: return "blocks";
    case DeltaMethod::Cactus: return "cactus";
    case DeltaMethod::FourPoint: return "four-point";
  }
  return "?";
}

}  // namespace ghyp
