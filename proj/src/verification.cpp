#include "ghyp/verification.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "ghyp/errors.hpp"
#include "ghyp/generators.hpp"
#include "ghyp/iso.hpp"
#include "ghyp/minors.hpp"

namespace ghyp {

const char* check_name(CheckKind k) {
  switch (k) {
    case CheckKind::Distances: return "distances";
    case CheckKind::Contraction: return "contraction";
    case CheckKind::Deletion: return "deletion";
    case CheckKind::Blocks: return "blocks";
    case CheckKind::Cactus: return "cactus";
  }
  return "?";
}

std::optional<CheckKind> check_from_name(const std::string& name) {
  for (CheckKind k : {CheckKind::Distances, CheckKind::Contraction, CheckKind::Deletion,
                      CheckKind::Blocks, CheckKind::Cactus})
    if (name == check_name(k)) return k;
  return std::nullopt;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

// Shared memo of exact delta values keyed by canonical code.  Only the
// value is stored, so cache hits cannot change any report.
struct DeltaCache {
  std::mutex mu;
  std::map<std::string, Len16> val;

  Len16 get(const MetricGraph& g) {
    std::string code = canonical_code(g);
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = val.find(code);
      if (it != val.end()) return it->second;
    }
    Len16 d = delta_exact(g).delta16;
    std::lock_guard<std::mutex> lk(mu);
    val.emplace(std::move(code), d);
    return d;
  }
};

CheckReport report_head(CheckKind k, const MetricGraph& g) {
  CheckReport rep;
  rep.check = k;
  rep.graph = canonical_edge_list(g);
  rep.mode = g.mode();
  return rep;
}

void set_edge(CheckReport& rep, const MetricGraph& g, int e) {
  rep.edge = e;
  rep.edge_u = g.edge_a(e);
  rep.edge_v = g.edge_b(e);
}

std::string pair_witness(GraphPoint x, GraphPoint y) {
  return "x:" + point_str(x) + ",y:" + point_str(y);
}

bool in_junction(GraphPoint p) {
  return p.kind == GraphPoint::Kind::Vertex || p.off8 == kUnit8 / 2;
}

CheckReport distances_impl(const MetricGraph& g, int e, GridSpec resolution) {
  Timer tm;
  CheckReport rep = report_head(CheckKind::Distances, g);
  set_edge(rep, g, e);

  ContractionResult c = contract_edge(g, e);
  std::vector<GraphPoint> grid = grid_points(g, resolution);
  int np = static_cast<int>(grid.size());

  bool simple = g.mode() == Mode::Simple;
  std::vector<std::uint64_t> on_tri(grid.size(), 0);
  if (simple) {
    std::vector<Triangle3> tris = cycles3_through_edge(g, e);
    if (tris.size() > 64)
      fail(Errc::Unsupported, "more than 64 triangles through one edge");
    for (int i = 0; i < np; ++i) {
      GraphPoint p = grid[i];
      for (std::size_t t = 0; t < tris.size(); ++t) {
        const Triangle3& tr = tris[t];
        bool on = p.kind == GraphPoint::Kind::Vertex
                      ? (p.id == tr.va || p.id == tr.vb || p.id == tr.vw)
                      : (p.id == tr.ea || p.id == tr.eb || p.id == tr.ew);
        if (on) on_tri[i] |= std::uint64_t{1} << t;
      }
    }
  }
  std::vector<GraphPoint> img(grid.size());
  for (int i = 0; i < np; ++i) img[i] = h_map(g, c, grid[i]);

  Len8 bound8 = simple ? 12 : 8;
  Len8 best = -1, best_d = 0, best_dq = 0;
  int bi = 0, bj = 0;
  for (int i = 0; i < np && rep.holds; ++i)
    for (int j = i + 1; j < np; ++j) {
      Len8 d = point_distance(g, grid[i], grid[j]);
      Len8 dq = point_distance(c.quotient, img[i], img[j]);
      Len8 gap = d - dq;
      bool ok = gap >= 0 && gap <= bound8;
      if (ok && simple && (in_junction(grid[i]) || in_junction(grid[j]) ||
                           (on_tri[i] & on_tri[j]) == 0))
        ok = gap <= 8;
      if (!ok) {
        rep.holds = false;
        best = gap;
        best_d = d;
        best_dq = dq;
        bi = i;
        bj = j;
        break;
      }
      if (gap > best) {
        best = gap;
        best_d = d;
        best_dq = dq;
        bi = i;
        bj = j;
      }
    }

  if (best < 0) best = 0;  // single grid point cannot happen with an edge present
  rep.values = {{"gap", Rat(best, 8)}, {"d", Rat(best_d, 8)}, {"d_contracted", Rat(best_dq, 8)}};
  rep.witness = pair_witness(grid[bi], grid[bj]);
  if (rep.holds) {
    if (simple && best == 12) rep.sharp.push_back("gap-3/2");
    if (!simple && best == 8) rep.sharp.push_back("gap-1");
  }
  rep.seconds = tm.secs();
  return rep;
}

CheckReport contraction_impl(const MetricGraph& g, int e, DeltaCache& cache) {
  Timer tm;
  CheckReport rep = report_head(CheckKind::Contraction, g);
  set_edge(rep, g, e);

  ContractionResult c = contract_edge(g, e);
  Len16 d16 = cache.get(g);
  Len16 q16 = cache.get(c.quotient);

  bool ok = 3 * d16 >= q16 && 3 * d16 <= 16 * q16 + 48;
  if (is_cut_edge(g, e)) ok = ok && d16 == q16;
  if (g.mode() == Mode::Simple) {
    if (is_tree(c.quotient)) ok = ok && d16 <= 16;
  } else {
    ok = ok && is_tree(g) == is_tree(c.quotient);
  }

  rep.holds = ok;
  rep.values = {{"delta", units16(d16)},
                {"delta_contracted", units16(q16)},
                {"lo", Rat(q16, 48)},
                {"hi", Rat(16 * q16 + 48, 48)}};
  if (ok) {
    if (3 * d16 == q16) rep.sharp.push_back("lower-equality");
    if (3 * d16 == 16 * q16 + 48) rep.sharp.push_back("upper-equality");
  }
  rep.seconds = tm.secs();
  return rep;
}

CheckReport deletion_impl(const MetricGraph& g, int e, DeltaCache& cache) {
  Timer tm;
  if (g.is_loop(e))
    fail(Errc::BadInput, "deletion bound needs a non-loop edge");
  CheckReport rep = report_head(CheckKind::Deletion, g);
  set_edge(rep, g, e);

  MetricGraph gd = delete_edge(g, e);
  Len16 d16 = cache.get(g);
  Len16 q16 = cache.get(gd);
  Len8 dd8 = gd.vdist8(g.edge_a(e), g.edge_b(e));

  Rat delta(d16, 16);
  Rat lower = rat_max(Rat(q16, 80), Rat(dd8 + 8, 32));
  Rat upper(6 * q16 + 2 * dd8, 16);
  rep.holds = lower <= delta && delta <= upper;
  rep.values = {{"delta", delta},
                {"delta_deleted", units16(q16)},
                {"d", Rat(dd8, 8)},
                {"lo", lower},
                {"hi", upper}};
  if (rep.holds) {
    if (delta == lower) rep.sharp.push_back("lower-equality");
    if (delta == upper) rep.sharp.push_back("upper-equality");
  }
  rep.seconds = tm.secs();
  return rep;
}

CheckReport blocks_impl(const MetricGraph& g, DeltaCache& cache) {
  Timer tm;
  CheckReport rep = report_head(CheckKind::Blocks, g);
  Len16 d16 = cache.get(g);
  Len16 b16 = delta_via_blocks(g).delta16;
  rep.holds = d16 == b16;
  rep.values = {{"delta", units16(d16)}, {"delta_blocks", units16(b16)}};
  rep.seconds = tm.secs();
  return rep;
}

CheckReport cactus_impl(const MetricGraph& g, DeltaCache& cache) {
  Timer tm;
  CactusProfile prof = cactus_profile(g);
  if (!prof.is_cactus)
    fail(Errc::NotProperCycles,
         "two cycles share an edge; the circumference/4 formula does not apply");
  CheckReport rep = report_head(CheckKind::Cactus, g);

  Len16 d16 = cache.get(g);
  int circ = prof.circumference.value_or(0);
  bool ok = d16 == 4 * static_cast<Len16>(circ);

  // The unique longest cycle, when there is one, is a block.
  std::vector<char> on_max(static_cast<std::size_t>(g.m()), 0);
  bool unique = prof.max_cycle_count == 1;
  if (unique) {
    TDecomposition dec = blocks(g);
    for (const Block& blk : dec.blocks)
      if (!blk.is_bridge && blk.graph.m() == circ)
        for (int f : blk.orig_edge) on_max[static_cast<std::size_t>(f)] = 1;
  }
  for (int e = 0; ok && e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    ContractionResult c = contract_edge(g, e);
    Len16 q16 = cache.get(c.quotient);
    bool expect_eq = !unique || !on_max[static_cast<std::size_t>(e)];
    if ((q16 == d16) != expect_eq) {
      ok = false;
      rep.witness = "edge:" + std::to_string(g.edge_a(e)) + "-" + std::to_string(g.edge_b(e));
    }
  }

  rep.holds = ok;
  rep.values = {{"delta", units16(d16)}, {"c4", Rat(circ, 4)}};
  rep.seconds = tm.secs();
  return rep;
}

SweepSummary run_sweep(const std::vector<MetricGraph>& graphs, std::string family, Mode mode,
                       const std::vector<CheckKind>& checks, int threads) {
  std::vector<CheckKind> order;
  for (CheckKind k : {CheckKind::Distances, CheckKind::Contraction, CheckKind::Deletion,
                      CheckKind::Blocks, CheckKind::Cactus})
    if (std::find(checks.begin(), checks.end(), k) != checks.end()) order.push_back(k);

  DeltaCache cache;
  std::vector<std::vector<CheckReport>> slots(graphs.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const MetricGraph& g = graphs[i];
      std::vector<CheckReport>& out = slots[i];
      for (CheckKind k : order) {
        switch (k) {
          case CheckKind::Distances:
            for (int e = 0; e < g.m(); ++e)
              if (!g.is_loop(e)) out.push_back(check_contraction_distance_bounds(g, e));
            break;
          case CheckKind::Contraction:
            for (int e = 0; e < g.m(); ++e)
              if (!g.is_loop(e)) out.push_back(contraction_impl(g, e, cache));
            break;
          case CheckKind::Deletion:
            for (int e = 0; e < g.m(); ++e)
              if (!g.is_loop(e) && !is_cut_edge(g, e)) out.push_back(deletion_impl(g, e, cache));
            break;
          case CheckKind::Blocks:
            out.push_back(blocks_impl(g, cache));
            break;
          case CheckKind::Cactus:
            if (cactus_profile(g).is_cactus) out.push_back(cactus_impl(g, cache));
            break;
        }
      }
    }
  };

  int nt = std::max(1, std::min<int>(threads, static_cast<int>(graphs.size())));
  if (nt <= 1) {
    work(0, graphs.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) {
      std::size_t lo = graphs.size() * static_cast<std::size_t>(t) / static_cast<std::size_t>(nt);
      std::size_t hi =
          graphs.size() * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(nt);
      pool.emplace_back([&, lo, hi, t] {
        try {
          work(lo, hi);
        } catch (...) {
          errs[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& ep : errs)
      if (ep) std::rethrow_exception(ep);
  }

  SweepSummary s;
  s.family = std::move(family);
  s.graphs = static_cast<std::int64_t>(graphs.size());
  for (CheckKind k : order) s.stats.push_back({k, 0, 0});
  std::set<std::tuple<std::string, int, std::string>> sharp_seen;
  for (const auto& reports : slots)
    for (const CheckReport& rep : reports) {
      for (CheckStat& st : s.stats)
        if (st.check == rep.check) {
          ++st.runs;
          if (rep.holds) ++st.holds;
        }
      if (!rep.holds) s.violations.push_back(rep);
      for (const std::string& tag : rep.sharp)
        sharp_seen.insert({rep.graph, static_cast<int>(rep.check), tag});
    }
  for (const auto& [graph, check, tag] : sharp_seen)
    s.sharpness.push_back({graph, static_cast<CheckKind>(check), tag});
  return s;
}

void check_budget(int vertices, Mode mode) {
  if (vertices < 1)
    fail(Errc::BadInput, "vertex count must be positive, got " + std::to_string(vertices));
  int limit = mode == Mode::Simple ? 7 : 5;
  if (vertices > limit)
    fail(Errc::BudgetExceeded, std::string("sweep budget is ") + std::to_string(limit) +
                                   " vertices in " + mode_name(mode) + " mode, got " +
                                   std::to_string(vertices));
}

std::vector<MetricGraph> family_graphs(int vertices, Mode mode) {
  return mode == Mode::Simple ? all_connected(vertices) : all_connected_multi(vertices);
}

}  // namespace

CheckReport check_contraction_distance_bounds(const MetricGraph& g, int e, GridSpec resolution) {
  if (e < 0 || e >= g.m())
    fail(Errc::BadInput, "edge id " + std::to_string(e) + " out of range");
  if (!valid_resolution(resolution.resolution))
    fail(Errc::BadInput, "resolution must be 1, 2, 4 or 8");
  return distances_impl(g, e, resolution);
}

CheckReport check_contraction_delta_bounds(const MetricGraph& g, int e) {
  DeltaCache cache;
  return contraction_impl(g, e, cache);
}

CheckReport check_deletion_delta_bounds(const MetricGraph& g, int e) {
  if (e < 0 || e >= g.m())
    fail(Errc::BadInput, "edge id " + std::to_string(e) + " out of range");
  DeltaCache cache;
  return deletion_impl(g, e, cache);
}

CheckReport check_blocks_delta(const MetricGraph& g) {
  DeltaCache cache;
  return blocks_impl(g, cache);
}

CheckReport check_cactus(const MetricGraph& g) {
  DeltaCache cache;
  return cactus_impl(g, cache);
}

std::vector<CheckKind> default_checks(Mode mode) {
  if (mode == Mode::Simple)
    return {CheckKind::Distances, CheckKind::Contraction, CheckKind::Deletion, CheckKind::Blocks,
            CheckKind::Cactus};
  return {CheckKind::Distances, CheckKind::Contraction};
}

SweepSummary exhaustive_verify(int vertices, Mode mode, const std::vector<CheckKind>& checks,
                               int threads) {
  check_budget(vertices, mode);
  std::string family =
      std::string(mode_name(mode)) + "-" + std::to_string(vertices);
  return run_sweep(family_graphs(vertices, mode), std::move(family), mode, checks, threads);
}

SweepSummary sweep_up_to(int max_vertices, Mode mode, const std::vector<CheckKind>& checks,
                         int threads) {
  check_budget(max_vertices, mode);
  std::vector<MetricGraph> graphs;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<MetricGraph> part = family_graphs(n, mode);
    for (auto& g : part) graphs.push_back(std::move(g));
  }
  std::string family =
      std::string(mode_name(mode)) + "-1.." + std::to_string(max_vertices);
  return run_sweep(std::move(graphs), std::move(family), mode, checks, threads);
}

std::vector<CheckReport> nonmonotonicity_witnesses() {
  std::vector<CheckReport> out;
  // W11: contracting the first rim edge yields W10 and delta rises.
  out.push_back(check_contraction_delta_bounds(wheel_graph(11), 10));
  // Theta(1,4,4): deleting the pole edge leaves C8 and delta rises.
  out.push_back(check_deletion_delta_bounds(theta_graph(1, 4, 4), 0));
  // C5: deleting any edge leaves a path and delta collapses.
  out.push_back(check_deletion_delta_bounds(cycle_graph(5), 0));
  return out;
}

}  // namespace ghyp
