#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghyp/hyperbolicity.hpp"
#include "ghyp/metric_graph.hpp"
#include "ghyp/rational.hpp"

namespace ghyp {

enum class CheckKind { Distances, Contraction, Deletion, Blocks, Cactus };

const char* check_name(CheckKind k);
std::optional<CheckKind> check_from_name(const std::string& name);

// Outcome of one inequality check on one graph (and, for the edge-scoped
// checks, one edge).  The values vector keeps a fixed per-check key order
// so rendered reports are stable.
struct CheckReport {
  CheckKind check = CheckKind::Distances;
  std::string graph;  // canonical edge list of the graph checked
  Mode mode = Mode::Simple;
  std::optional<int> edge;  // id in the checked graph, for edge-scoped checks
  int edge_u = 0, edge_v = 0;
  bool holds = true;
  std::vector<std::pair<std::string, Rat>> values;
  std::string witness;             // space-free locator of the extreme point(s)
  std::vector<std::string> sharp;  // bounds attained with equality
  double seconds = 0.0;            // wall time; excluded from all rendering
};

struct SharpHit {
  std::string graph;
  CheckKind check;
  std::string tag;
};

struct CheckStat {
  CheckKind check;
  std::int64_t runs = 0;
  std::int64_t holds = 0;
};

struct SweepSummary {
  std::string family;
  std::int64_t graphs = 0;
  std::vector<CheckStat> stats;        // enabled checks, enum order
  std::vector<CheckReport> violations; // graph order, then check, then edge
  std::vector<SharpHit> sharpness;     // dedup, sorted by (graph, check, tag)
};

// Contraction is 1-Lipschitz and contracts distances by at most 3/2 in
// simple mode (at most 1 when either point is a vertex or midpoint, or the
// two points share no 3-cycle through e) and by at most 1 uniformly in
// multi mode.  Checked over all grid-point pairs; reports the largest gap.
CheckReport check_contraction_distance_bounds(const MetricGraph& g, int e,
                                              GridSpec resolution = {8});

// delta(G/e)/3 <= delta(G) <= 16/3 delta(G/e) + 1; equality of the two
// deltas when e is a cut edge; in simple mode delta(G) <= 1 when G/e is a
// tree; in multi mode G is a tree exactly when G/e is.
CheckReport check_contraction_delta_bounds(const MetricGraph& g, int e);

// max{delta(G\e)/5, (d+1)/4} <= delta(G) <= 6 delta(G\e) + d with
// d = d_{G\e}(A,B) for the endpoints A,B of e.  e must not be a cut edge;
// loops are outside the statement's scope.
CheckReport check_deletion_delta_bounds(const MetricGraph& g, int e);

// delta(G) equals the maximum of delta over the two-connected blocks.
CheckReport check_blocks_delta(const MetricGraph& g);

// On a graph with pairwise edge-disjoint cycles: delta(G) equals
// circumference/4, and contracting a non-loop edge preserves delta exactly
// when the longest cycle is not unique or e avoids the unique one.
// Throws NotProperCycles on other graphs.
CheckReport check_cactus(const MetricGraph& g);

// Checks run by default in a sweep for each mode.
std::vector<CheckKind> default_checks(Mode mode);

// Runs the selected checks on one representative per isomorphism class of
// connected graphs with exactly `vertices` vertices (multi mode bounds:
// edge multiplicity <= 2, at most one loop per vertex).  Budget: at most
// 7 vertices simple, 5 multi.
SweepSummary exhaustive_verify(int vertices, Mode mode, const std::vector<CheckKind>& checks,
                               int threads = 1);

// Same harness over every vertex count 1..max_vertices, merged into one
// summary; this is what the CLI sweep runs.
SweepSummary sweep_up_to(int max_vertices, Mode mode, const std::vector<CheckKind>& checks,
                         int threads = 1);

// The three monotonicity failures reproduced as ordinary check reports:
// the wheel W11 rim contraction (delta rises 5/4 -> 3/2), the Theta(1,4,4)
// pole-edge deletion (7/4 -> 2), the C5 deletion (5/4 -> 0).
std::vector<CheckReport> nonmonotonicity_witnesses();

}  // namespace ghyp
