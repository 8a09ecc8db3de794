#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghyp/metric_graph.hpp"
#include "ghyp/rational.hpp"

namespace ghyp {

// Fate of an edge under contraction.
struct EdgeFate {
  enum class Kind : std::uint8_t { Kept, Collapsed, MergedInto };
  Kind kind = Kind::Kept;
  int target = -1;  // new edge id for Kept/MergedInto, -1 for Collapsed
};

struct ContractionResult {
  MetricGraph quotient;
  int merged_vertex = 0;           // id of V_e in the quotient
  std::vector<int> vertex_map;     // old vertex -> new vertex
  std::vector<EdgeFate> edge_map;  // old edge -> fate
  int contracted_edge = 0;
};

// Contract a non-loop edge e.  Simple mode merges the duplicate pair
// [v,A],[v,B] into one edge; Multi mode keeps parallels and turns other
// A-B edges into loops at the merged vertex.
ContractionResult contract_edge(const MetricGraph& g, int e);

// Image of a point under the contraction map: e collapses to the merged
// vertex, every other edge carries its offsets across.
GraphPoint h_map(const MetricGraph& g, const ContractionResult& c, GraphPoint p);

// Remove a non-cut edge, keeping every vertex.
MetricGraph delete_edge(const MetricGraph& g, int e);

bool is_cut_edge(const MetricGraph& g, int e);
bool is_cut_vertex(const MetricGraph& g, int v);

// One block of the decomposition, with maps back into the host graph.
struct Block {
  MetricGraph graph;
  std::vector<int> orig_vertex;  // block vertex -> host vertex
  std::vector<int> orig_edge;    // block edge -> host edge
  bool is_bridge = false;
};

// Maximal two-connected pieces; bridges are single-edge blocks, a loop is
// a block of its own.  Blocks ordered by smallest contained edge id.
struct TDecomposition {
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;   // ascending
  std::vector<int> edge_block;     // host edge -> block index
};

TDecomposition blocks(const MetricGraph& g);

struct CactusProfile {
  bool is_cactus = false;
  std::optional<int> circumference;  // edge count of a longest cycle
  std::int64_t max_cycle_count = 0;  // cycles attaining the circumference
  bool search_capped = false;        // cycle search hit its work cap
};

// Exact for cacti via blocks; otherwise exhaustive cycle search bounded by
// work_cap extension steps.
CactusProfile cactus_profile(const MetricGraph& g, std::int64_t work_cap = 10'000'000);

struct Triangle3 {
  int va, vb, vw;      // e's endpoints then the apex
  int ea, eb, ew;      // e, then the edge [B,w], then [w,A]
};

// All 3-cycles through edge e; parallel copies yield one entry per choice.
std::vector<Triangle3> cycles3_through_edge(const MetricGraph& g, int e);

struct MinorOp {
  enum class Kind : std::uint8_t { Contract, Delete };
  Kind kind = Kind::Contract;
  int edge = 0;  // edge id in the graph the op is applied to
};

struct BoundStep {
  MinorOp op;
  int edge_u = 0, edge_v = 0;    // endpoints at application time
  std::optional<std::int64_t> d_units;  // d_{G\e}(A,B) for deletions
  Rat lo, hi;                    // bounds on delta before this step,
                                 // composed down from the final graph
};

struct BoundChain {
  std::vector<BoundStep> steps;
  Rat delta_final;  // exact delta of the resulting minor
  Rat lo, hi;       // interval certified for delta of the original graph
};

struct MinorSequenceResult {
  MetricGraph result;
  BoundChain chain;
};

// Applies ops left to right; edge ids are interpreted in the intermediate
// graph each op sees.  Errors name the failing step.
MinorSequenceResult apply_minor_sequence(const MetricGraph& g, const std::vector<MinorOp>& ops);

}  // namespace ghyp
