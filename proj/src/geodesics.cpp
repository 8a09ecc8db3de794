#include <algorithm>
#include <cassert>
#include <optional>

#include "ghyp/metric_graph.hpp"

namespace ghyp {

namespace {

struct EndOption {
  int v;                   // vertex where the path meets the edge skeleton
  Len8 cost;               // eighths spent inside the host edge
  std::optional<Seg> seg;  // the partial-edge stretch, absent for vertices
};

std::vector<EndOption> departures(const MetricGraph& g, GraphPoint p) {
  if (p.kind == GraphPoint::Kind::Vertex) return {{p.id, 0, std::nullopt}};
  int e = p.id;
  Len8 t = p.off8;
  // For a loop both exits land on the same vertex via distinct stretches.
  return {{g.edge_a(e), t, Seg{e, p.off8, 0}},
          {g.edge_b(e), kUnit8 - t, Seg{e, p.off8, static_cast<std::int32_t>(kUnit8)}}};
}

std::vector<EndOption> arrivals(const MetricGraph& g, GraphPoint q) {
  if (q.kind == GraphPoint::Kind::Vertex) return {{q.id, 0, std::nullopt}};
  int e = q.id;
  Len8 t = q.off8;
  return {{g.edge_a(e), t, Seg{e, 0, q.off8}},
          {g.edge_b(e), kUnit8 - t, Seg{e, static_cast<std::int32_t>(kUnit8), q.off8}}};
}

// All shortest vertex-to-vertex edge paths of length rem, extended in
// ascending edge-id order so each bucket comes out lexicographic.
void vertex_paths(const MetricGraph& g, int x, int w, Len8 rem, std::vector<Seg>& cur,
                  std::vector<std::vector<Seg>>& out, size_t limit, bool& hit_limit) {
  if (out.size() >= limit) {
    hit_limit = true;
    return;
  }
  if (rem == 0) {
    assert(x == w);
    out.push_back(cur);
    return;
  }
  for (auto [e, y] : g.incidence(x)) {
    if (y == x) continue;  // loops never lie on a shortest vertex path
    if (g.vdist8(y, w) != rem - kUnit8) continue;
    bool from_a = (g.edge_a(e) == x);
    cur.push_back(Seg{e, from_a ? 0 : static_cast<std::int32_t>(kUnit8),
                      from_a ? static_cast<std::int32_t>(kUnit8) : 0});
    vertex_paths(g, y, w, rem - kUnit8, cur, out, limit, hit_limit);
    cur.pop_back();
    if (out.size() >= limit && hit_limit) return;
  }
}

GeodesicPath assemble(GraphPoint p, GraphPoint q, std::vector<Seg> segs) {
  GeodesicPath gp;
  gp.start = p;
  gp.end = q;
  gp.total_len8 = 0;
  for (const auto& s : segs) gp.total_len8 += s.len8();
  gp.segs = std::move(segs);
  return gp;
}

}  // namespace

GeodesicList enumerate_geodesics(const MetricGraph& g, GraphPoint p, GraphPoint q, int cap) {
  if (cap < 1) fail(Errc::BadInput, "geodesic cap must be positive");
  GeodesicList out;
  if (p == q) {
    out.paths.push_back(assemble(p, q, {}));
    return out;
  }

  Len8 total = point_distance(g, p, q);
  std::vector<GeodesicPath> found;
  size_t limit = static_cast<size_t>(cap) + 1;
  bool any_bucket_truncated = false;

  // Direct stretch when both points sit inside the same edge.  On a loop
  // this is the arc avoiding the junction; the other arc comes out of the
  // departure/arrival combinations below.
  if (p.kind == GraphPoint::Kind::Interior && q.kind == GraphPoint::Kind::Interior &&
      p.id == q.id) {
    Seg direct{p.id, p.off8, q.off8};
    if (direct.len8() == total) found.push_back(assemble(p, q, {direct}));
  }

  for (const auto& dep : departures(g, p)) {
    for (const auto& arr : arrivals(g, q)) {
      Len8 rem = total - dep.cost - arr.cost;
      if (rem < 0 || g.vdist8(dep.v, arr.v) != rem) continue;
      std::vector<std::vector<Seg>> mids;
      std::vector<Seg> cur;
      bool hit = false;
      vertex_paths(g, dep.v, arr.v, rem, cur, mids, limit, hit);
      any_bucket_truncated = any_bucket_truncated || hit;
      for (auto& mid : mids) {
        std::vector<Seg> segs;
        segs.reserve(mid.size() + 2);
        if (dep.seg) segs.push_back(*dep.seg);
        segs.insert(segs.end(), mid.begin(), mid.end());
        if (arr.seg) segs.push_back(*arr.seg);
        // A length-0 candidate would mean p == q, handled above.
        assert(!segs.empty());
        found.push_back(assemble(p, q, std::move(segs)));
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const GeodesicPath& a, const GeodesicPath& b) { return a.segs < b.segs; });
  if (found.size() > static_cast<size_t>(cap)) {
    found.resize(static_cast<size_t>(cap));
    out.truncated = true;
  }
  out.truncated = out.truncated || any_bucket_truncated;
  out.paths = std::move(found);
  return out;
}

}  // namespace ghyp
