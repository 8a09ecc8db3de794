#include "ghyp/minors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ghyp/hyperbolicity.hpp"

namespace ghyp {

namespace {

void check_edge_id(const MetricGraph& g, int e) {
  if (e < 0 || e >= g.m())
    fail(Errc::BadInput, "edge id " + std::to_string(e) + " out of range (graph has " +
                             std::to_string(g.m()) + " edges)");
}

std::string vertex_set_str(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

}  // namespace

ContractionResult contract_edge(const MetricGraph& g, int e) {
  check_edge_id(g, e);
  int a = g.edge_a(e), b = g.edge_b(e);
  if (a == b)
    fail(Errc::LoopContraction, "cannot contract loop edge " + std::to_string(e) +
                                    " at vertex " + std::to_string(a));
  int lo = std::min(a, b), hi = std::max(a, b);

  ContractionResult res;
  res.contracted_edge = e;
  res.merged_vertex = lo;
  res.vertex_map.resize(g.n());
  for (int v = 0; v < g.n(); ++v)
    res.vertex_map[v] = (v == a || v == b) ? lo : (v > hi ? v - 1 : v);

  res.edge_map.assign(g.m(), EdgeFate{});
  res.edge_map[e] = EdgeFate{EdgeFate::Kind::Collapsed, -1};

  std::vector<std::pair<int, int>> edges;   // quotient records, orientation kept
  std::vector<int> creator;                 // old edge that created each record
  std::map<std::pair<int, int>, int> seen;  // unordered endpoint pair -> new id

  for (int f = 0; f < g.m(); ++f) {
    if (f == e) continue;
    int x = res.vertex_map[g.edge_a(f)];
    int y = res.vertex_map[g.edge_b(f)];
    if (g.mode() == Mode::Simple) {
      auto key = std::minmax(x, y);
      auto it = seen.find(key);
      if (it != seen.end()) {
        int id = it->second;
        res.edge_map[f] = EdgeFate{EdgeFate::Kind::MergedInto, id};
        res.edge_map[creator[id]] = EdgeFate{EdgeFate::Kind::MergedInto, id};
        continue;
      }
      seen.emplace(key, static_cast<int>(edges.size()));
    }
    res.edge_map[f] = EdgeFate{EdgeFate::Kind::Kept, static_cast<int>(edges.size())};
    creator.push_back(f);
    edges.emplace_back(x, y);
  }

  res.quotient = MetricGraph::from_compact(g.n() - 1, edges, g.mode());
  return res;
}

GraphPoint h_map(const MetricGraph& g, const ContractionResult& c, GraphPoint p) {
  if (p.kind == GraphPoint::Kind::Vertex) return vertex_point(c.vertex_map.at(p.id));
  int f = p.id;
  if (f == c.contracted_edge) return vertex_point(c.merged_vertex);
  const EdgeFate& fate = c.edge_map.at(f);
  int t = fate.target;
  int x = c.vertex_map[g.edge_a(f)];
  int y = c.vertex_map[g.edge_b(f)];
  Len8 off = p.off8;
  // When the surviving record runs the opposite way the offset flips.
  if (x != y && !(x == c.quotient.edge_a(t) && y == c.quotient.edge_b(t))) off = kUnit8 - off;
  return interior_point(c.quotient, t, off);
}

bool is_cut_edge(const MetricGraph& g, int e) {
  check_edge_id(g, e);
  if (g.edge_a(e) == g.edge_b(e)) return false;
  // BFS from one endpoint avoiding e.
  std::vector<char> vis(g.n(), 0);
  std::vector<int> queue{g.edge_a(e)};
  vis[g.edge_a(e)] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (auto [f, w] : g.incidence(v)) {
      if (f == e || vis[w]) continue;
      vis[w] = 1;
      queue.push_back(w);
    }
  }
  return !vis[g.edge_b(e)];
}

MetricGraph delete_edge(const MetricGraph& g, int e) {
  check_edge_id(g, e);
  if (is_cut_edge(g, e)) {
    std::vector<char> vis(g.n(), 0);
    std::vector<int> side{g.edge_a(e)};
    vis[g.edge_a(e)] = 1;
    for (std::size_t h = 0; h < side.size(); ++h)
      for (auto [f, w] : g.incidence(side[h])) {
        if (f == e || vis[w]) continue;
        vis[w] = 1;
        side.push_back(w);
      }
    std::vector<int> other;
    for (int v = 0; v < g.n(); ++v)
      if (!vis[v]) other.push_back(v);
    std::sort(side.begin(), side.end());
    fail(Errc::WouldDisconnect, "deleting edge " + std::to_string(e) +
                                    " disconnects the graph into components " +
                                    vertex_set_str(side) + " and " + vertex_set_str(other));
  }
  std::vector<std::pair<int, int>> edges;
  for (int f = 0; f < g.m(); ++f) {
    if (f == e) continue;
    edges.emplace_back(g.edge_a(f), g.edge_b(f));
  }
  return MetricGraph::from_compact(g.n(), edges, g.mode());
}

namespace {

struct BlockFinder {
  const MetricGraph& g;
  std::vector<int> disc, low;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> groups;  // host edge ids per block
  int timer = 1;

  explicit BlockFinder(const MetricGraph& gr)
      : g(gr), disc(gr.n(), 0), low(gr.n(), 0) {}

  void pop_group(int until_edge) {
    std::vector<int> grp;
    while (true) {
      int f = edge_stack.back();
      edge_stack.pop_back();
      grp.push_back(f);
      if (f == until_edge) break;
    }
    groups.push_back(std::move(grp));
  }

  void dfs(int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (auto [f, v] : g.incidence(u)) {
      if (v == u) continue;  // loops become their own blocks separately
      if (f == parent_edge) continue;
      if (!disc[v]) {
        edge_stack.push_back(f);
        dfs(v, f);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) pop_group(f);
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back(f);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

TDecomposition blocks(const MetricGraph& g) {
  BlockFinder bf(g);
  for (int e = 0; e < g.m(); ++e)
    if (g.edge_a(e) == g.edge_b(e)) bf.groups.push_back({e});
  for (int v = 0; v < g.n(); ++v)
    if (!bf.disc[v]) bf.dfs(v, -1);

  for (auto& grp : bf.groups) std::sort(grp.begin(), grp.end());
  std::sort(bf.groups.begin(), bf.groups.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });

  TDecomposition dec;
  dec.edge_block.assign(g.m(), -1);
  std::vector<int> membership(g.n(), 0);
  for (const auto& grp : bf.groups) {
    Block blk;
    blk.orig_edge = grp;
    std::set<int> vs;
    for (int f : grp) {
      vs.insert(g.edge_a(f));
      vs.insert(g.edge_b(f));
    }
    blk.orig_vertex.assign(vs.begin(), vs.end());
    std::map<int, int> local;
    for (std::size_t i = 0; i < blk.orig_vertex.size(); ++i)
      local[blk.orig_vertex[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int f : grp) {
      edges.emplace_back(local[g.edge_a(f)], local[g.edge_b(f)]);
      dec.edge_block[f] = static_cast<int>(dec.blocks.size());
    }
    blk.graph = MetricGraph::from_compact(static_cast<int>(blk.orig_vertex.size()), edges,
                                          g.mode());
    blk.is_bridge = grp.size() == 1 && g.edge_a(grp[0]) != g.edge_b(grp[0]);
    for (int v : blk.orig_vertex) ++membership[v];
    dec.blocks.push_back(std::move(blk));
  }
  for (int v = 0; v < g.n(); ++v)
    if (membership[v] >= 2) dec.cut_vertices.push_back(v);
  return dec;
}

bool is_cut_vertex(const MetricGraph& g, int v) {
  if (v < 0 || v >= g.n())
    fail(Errc::BadInput, "vertex id " + std::to_string(v) + " out of range");
  TDecomposition dec = blocks(g);
  return std::binary_search(dec.cut_vertices.begin(), dec.cut_vertices.end(), v);
}

namespace {

// Enumerates simple cycles by edge set: each cycle is visited from its
// minimal vertex, once per direction, and deduplicated.
struct CycleSearch {
  const MetricGraph& g;
  std::int64_t budget;
  bool capped = false;
  std::set<std::vector<int>> cycles;
  std::vector<char> visited;
  std::vector<int> path_edges;
  int start = 0;

  CycleSearch(const MetricGraph& gr, std::int64_t cap)
      : g(gr), budget(cap), visited(gr.n(), 0) {}

  void record(int closing) {
    std::vector<int> key = path_edges;
    key.push_back(closing);
    std::sort(key.begin(), key.end());
    cycles.insert(std::move(key));
  }

  void dfs(int v) {
    for (auto [f, y] : g.incidence(v)) {
      if (capped) return;
      if (--budget < 0) {
        capped = true;
        return;
      }
      if (y == v) continue;  // loops handled outside the walk
      if (y == start && !path_edges.empty()) {
        if (!(path_edges.size() == 1 && path_edges[0] == f)) record(f);
        continue;
      }
      if (y <= start || visited[y]) continue;
      visited[y] = 1;
      path_edges.push_back(f);
      dfs(y);
      path_edges.pop_back();
      visited[y] = 0;
    }
  }

  void run() {
    for (int e = 0; e < g.m(); ++e)
      if (g.edge_a(e) == g.edge_b(e)) cycles.insert({e});
    for (start = 0; start < g.n() && !capped; ++start) {
      std::fill(visited.begin(), visited.end(), 0);
      visited[start] = 1;
      path_edges.clear();
      dfs(start);
    }
  }
};

}  // namespace

CactusProfile cactus_profile(const MetricGraph& g, std::int64_t work_cap) {
  CactusProfile prof;
  TDecomposition dec = blocks(g);
  bool cactus = true;
  int best = 0, count = 0;
  for (const Block& blk : dec.blocks) {
    if (blk.is_bridge) continue;
    const MetricGraph& bg = blk.graph;
    bool cycle = bg.m() == bg.n();
    for (int v = 0; cycle && v < bg.n(); ++v)
      if (bg.degree(v) != 2) cycle = false;
    if (!cycle) {
      cactus = false;
      break;
    }
    int len = bg.m();
    if (len > best) {
      best = len;
      count = 1;
    } else if (len == best) {
      ++count;
    }
  }
  if (cactus) {
    prof.is_cactus = true;
    if (best > 0) {
      prof.circumference = best;
      prof.max_cycle_count = count;
    }
    return prof;
  }

  prof.is_cactus = false;
  CycleSearch cs(g, work_cap);
  cs.run();
  prof.search_capped = cs.capped;
  std::size_t longest = 0;
  int n_at = 0;
  for (const auto& cyc : cs.cycles) {
    if (cyc.size() > longest) {
      longest = cyc.size();
      n_at = 1;
    } else if (cyc.size() == longest) {
      ++n_at;
    }
  }
  if (longest > 0) {
    prof.circumference = static_cast<int>(longest);
    prof.max_cycle_count = n_at;
  }
  return prof;
}

std::vector<Triangle3> cycles3_through_edge(const MetricGraph& g, int e) {
  check_edge_id(g, e);
  std::vector<Triangle3> out;
  int a = g.edge_a(e), b = g.edge_b(e);
  if (a == b) return out;
  for (int w = 0; w < g.n(); ++w) {
    if (w == a || w == b) continue;
    std::vector<int> fb, fa;  // edges {b,w} and {w,a}
    for (auto [f, y] : g.incidence(w)) {
      if (f == e || y == w) continue;
      if (y == b) fb.push_back(f);
      if (y == a) fa.push_back(f);
    }
    for (int f : fb)
      for (int h : fa) out.push_back(Triangle3{a, b, w, e, f, h});
  }
  return out;
}

MinorSequenceResult apply_minor_sequence(const MetricGraph& g, const std::vector<MinorOp>& ops) {
  MinorSequenceResult res;
  res.result = g;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const MinorOp& op = ops[k];
    BoundStep step;
    step.op = op;
    try {
      check_edge_id(res.result, op.edge);
      step.edge_u = res.result.edge_a(op.edge);
      step.edge_v = res.result.edge_b(op.edge);
      if (op.kind == MinorOp::Kind::Contract) {
        res.result = contract_edge(res.result, op.edge).quotient;
      } else {
        MetricGraph next = delete_edge(res.result, op.edge);
        step.d_units = next.vdist8(step.edge_u, step.edge_v) / kUnit8;
        res.result = std::move(next);
      }
    } catch (const Error& err) {
      fail(err.code, "step " + std::to_string(k + 1) + ": " + err.what());
    }
    res.chain.steps.push_back(step);
  }

  res.chain.delta_final = delta_exact(res.result).delta();
  Rat lo = res.chain.delta_final, hi = lo;
  for (auto it = res.chain.steps.rbegin(); it != res.chain.steps.rend(); ++it) {
    if (it->op.kind == MinorOp::Kind::Contract) {
      lo = lo / Rat(3);
      hi = hi * Rat(16, 3) + Rat(1);
    } else {
      Rat d(*it->d_units);
      lo = rat_max(lo / Rat(5), (d + Rat(1)) / Rat(4));
      hi = hi * Rat(6) + d;
    }
    it->lo = lo;
    it->hi = hi;
  }
  res.chain.lo = lo;
  res.chain.hi = hi;
  return res;
}

}  // namespace ghyp
