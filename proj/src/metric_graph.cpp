#include "ghyp/metric_graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ghyp {

GraphPoint vertex_point(int v) {
  GraphPoint p;
  p.kind = GraphPoint::Kind::Vertex;
  p.id = v;
  p.off8 = 0;
  return p;
}

GraphPoint interior_point(const MetricGraph& g, int e, Len8 off8) {
  if (e < 0 || e >= g.m()) fail(Errc::BadInput, "edge id " + std::to_string(e) + " out of range");
  if (off8 < 0 || off8 > kUnit8)
    fail(Errc::BadInput, "offset " + std::to_string(off8) + " outside [0,8] eighths");
  if (off8 == 0) return vertex_point(g.edge_a(e));
  if (off8 == kUnit8) return vertex_point(g.edge_b(e));
  GraphPoint p;
  p.kind = GraphPoint::Kind::Interior;
  p.id = e;
  p.off8 = static_cast<std::int32_t>(off8);
  return p;
}

MetricGraph MetricGraph::from_edges(const std::vector<std::pair<int, int>>& raw, Mode mode,
                                    std::vector<int>* labels) {
  if (raw.empty()) fail(Errc::EmptyGraph, "graph has no edges");

  // Compact labels to 0..n-1 preserving first-appearance order.
  std::map<int, int> remap;
  std::vector<int> orig;
  auto relabel = [&](int v) {
    if (v < 0) fail(Errc::BadInput, "negative vertex label " + std::to_string(v));
    auto it = remap.find(v);
    if (it != remap.end()) return it->second;
    int id = static_cast<int>(orig.size());
    remap.emplace(v, id);
    orig.push_back(v);
    return id;
  };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : raw) {
    if (mode == Mode::Simple) {
      if (a == b)
        fail(Errc::SimpleModeViolation, "loop " + std::to_string(a) + " " + std::to_string(b) +
                                            " not allowed in simple mode");
      auto key = std::minmax(a, b);
      if (!seen.insert(key).second)
        fail(Errc::SimpleModeViolation, "duplicate edge " + std::to_string(a) + " " +
                                            std::to_string(b) + " not allowed in simple mode");
    }
    int ca = relabel(a);
    int cb = relabel(b);
    edges.emplace_back(ca, cb);
  }

  MetricGraph g;
  g.mode_ = mode;
  g.n_ = static_cast<int>(orig.size());
  g.edges_ = std::move(edges);
  g.finish();

  // Connectivity check, reporting components with the original labels.
  std::vector<int> comp(g.n_, -1);
  int ncomp = 0;
  for (int s = 0; s < g.n_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::deque<int> bfs{s};
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (auto [e, w] : g.inc_[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          bfs.push_back(w);
        }
    }
    ++ncomp;
  }
  if (ncomp > 1) {
    std::ostringstream os;
    os << "graph is not connected; components:";
    for (int c = 0; c < ncomp; ++c) {
      os << " {";
      bool first = true;
      for (int v = 0; v < g.n_; ++v)
        if (comp[v] == c) {
          if (!first) os << ",";
          os << orig[v];
          first = false;
        }
      os << "}";
    }
    fail(Errc::Disconnected, os.str());
  }
  if (labels) *labels = std::move(orig);
  return g;
}

MetricGraph MetricGraph::from_compact(int n, std::vector<std::pair<int, int>> edges, Mode mode) {
  MetricGraph g;
  g.mode_ = mode;
  g.n_ = n;
  g.edges_ = std::move(edges);
#ifndef NDEBUG
  for (auto [a, b] : g.edges_) assert(a >= 0 && a < n && b >= 0 && b < n);
#endif
  g.finish();
  return g;
}

MetricGraph MetricGraph::single_vertex(Mode mode) {
  MetricGraph g;
  g.mode_ = mode;
  g.n_ = 1;
  g.finish();
  return g;
}

int MetricGraph::degree(int v) const {
  int d = 0;
  for (auto [e, w] : inc_[v]) d += (w == v) ? 2 : 1;
  return d;
}

void MetricGraph::finish() {
  inc_.assign(n_, {});
  for (int e = 0; e < m(); ++e) {
    auto [a, b] = edges_[e];
    inc_[a].emplace_back(e, b);
    if (b != a) inc_[b].emplace_back(e, a);
  }
  for (auto& lst : inc_) std::sort(lst.begin(), lst.end());

  // BFS per source; unit edges, distances stored in eighths.
  const Len8 inf = -1;
  dist_.assign(static_cast<size_t>(n_) * n_, inf);
  std::deque<int> bfs;
  for (int s = 0; s < n_; ++s) {
    Len8* row = dist_.data() + static_cast<size_t>(s) * n_;
    row[s] = 0;
    bfs.clear();
    bfs.push_back(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (auto [e, w] : inc_[v])
        if (w != v && row[w] == inf) {
          row[w] = row[v] + kUnit8;
          bfs.push_back(w);
        }
    }
  }
}

std::vector<std::vector<Len8>> vertex_distance_matrix(const MetricGraph& g) {
  std::vector<std::vector<Len8>> out(g.n(), std::vector<Len8>(g.n()));
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) out[u][v] = g.vdist8(u, v);
  return out;
}

namespace {

// Exit options from a point: (vertex reached, cost in eighths).
// A loop has a single exit vertex, reachable both ways round.
inline int exit_count(const MetricGraph& g, GraphPoint p, int out_v[2], Len8 out_c[2]) {
  if (p.kind == GraphPoint::Kind::Vertex) {
    out_v[0] = p.id;
    out_c[0] = 0;
    return 1;
  }
  int e = p.id;
  if (g.is_loop(e)) {
    out_v[0] = g.edge_a(e);
    out_c[0] = std::min<Len8>(p.off8, kUnit8 - p.off8);
    return 1;
  }
  out_v[0] = g.edge_a(e);
  out_c[0] = p.off8;
  out_v[1] = g.edge_b(e);
  out_c[1] = kUnit8 - p.off8;
  return 2;
}

}  // namespace

Len8 point_distance(const MetricGraph& g, GraphPoint p, GraphPoint q) {
  if (p == q) return 0;
  if (p.kind == GraphPoint::Kind::Interior && q.kind == GraphPoint::Kind::Interior &&
      p.id == q.id) {
    Len8 d = p.off8 > q.off8 ? p.off8 - q.off8 : q.off8 - p.off8;
    if (g.is_loop(p.id)) return std::min(d, kUnit8 - d);
    return d;  // the direct stretch always wins on a non-loop edge
  }
  int pv[2], qv[2];
  Len8 pc[2], qc[2];
  int np = exit_count(g, p, pv, pc);
  int nq = exit_count(g, q, qv, qc);
  Len8 best = -1;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      Len8 d = pc[i] + g.vdist8(pv[i], qv[j]) + qc[j];
      if (best < 0 || d < best) best = d;
    }
  return best;
}

std::vector<GraphPoint> grid_points(const MetricGraph& g, GridSpec grid) {
  if (!valid_resolution(grid.resolution))
    fail(Errc::BadInput, "grid resolution must be 1, 2, 4, or 8");
  std::vector<GraphPoint> pts;
  for (int v = 0; v < g.n(); ++v) pts.push_back(vertex_point(v));
  Len8 step = kUnit8 / grid.resolution;
  for (int e = 0; e < g.m(); ++e)
    for (Len8 t = step; t < kUnit8; t += step) pts.push_back(interior_point(g, e, t));
  return pts;
}

bool is_tree(const MetricGraph& g) {
  // Connected by construction, so acyclic iff m == n-1 (any loop or
  // parallel pair forces m >= n).
  return g.m() == g.n() - 1;
}

GeodesicPath reversed(const GeodesicPath& p) {
  GeodesicPath r;
  r.start = p.end;
  r.end = p.start;
  r.total_len8 = p.total_len8;
  r.segs.reserve(p.segs.size());
  for (auto it = p.segs.rbegin(); it != p.segs.rend(); ++it)
    r.segs.push_back(Seg{it->e, it->to8, it->from8});
  return r;
}

std::string point_str(GraphPoint p) {
  if (p.kind == GraphPoint::Kind::Vertex) return "v" + std::to_string(p.id);
  return "e" + std::to_string(p.id) + "@" + Rat(p.off8, kUnit8).str();
}

std::string len8_str(Len8 v) { return Rat(v, kUnit8).str(); }

}  // namespace ghyp
