#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ghyp/errors.hpp"
#include "ghyp/rational.hpp"

namespace ghyp {

// All lengths are exact integers in eighths of a unit edge.
using Len8 = std::int64_t;
inline constexpr Len8 kUnit8 = 8;

enum class Mode { Simple, Multi };

inline const char* mode_name(Mode m) { return m == Mode::Simple ? "simple" : "multi"; }

// Interior sample density: points per edge at offsets k*8/resolution.
// resolution 2 is the classical vertex-and-midpoint grid.
struct GridSpec {
  int resolution = 2;
};
inline bool valid_resolution(int r) { return r == 1 || r == 2 || r == 4 || r == 8; }

class MetricGraph;

// A location on the metric space: a vertex, or an interior point of an edge
// at an offset in eighths measured from the edge's first endpoint.
// On a loop, offsets t and 8-t are distinct points.
struct GraphPoint {
  enum class Kind : std::uint8_t { Vertex, Interior };
  Kind kind = Kind::Vertex;
  std::int32_t id = 0;    // vertex id, or host edge id for Interior
  std::int32_t off8 = 0;  // 0 for Vertex, in (0,8) for Interior

  friend auto operator<=>(const GraphPoint&, const GraphPoint&) = default;
};

GraphPoint vertex_point(int v);
// Canonical form: offsets 0 and 8 collapse to the corresponding endpoint vertex.
GraphPoint interior_point(const MetricGraph& g, int e, Len8 off8);

// Finite connected graph, every edge isometric to [0,1].  Immutable after
// construction; vertex ids are 0..n-1, edge ids 0..m-1 in input order.
class MetricGraph {
 public:
  // Empty placeholder so results can hold a graph slot; only the factories
  // produce usable graphs.
  MetricGraph() = default;

  // Compacts arbitrary non-negative labels to 0..n-1 by first appearance,
  // validates mode rules and connectivity.  If labels is non-null it
  // receives the original label of each compact vertex id.
  static MetricGraph from_edges(const std::vector<std::pair<int, int>>& raw, Mode mode,
                                std::vector<int>* labels = nullptr);
  // Pre-compacted input, already known to satisfy the mode rules.
  static MetricGraph from_compact(int n, std::vector<std::pair<int, int>> edges, Mode mode);
  static MetricGraph single_vertex(Mode mode = Mode::Simple);

  Mode mode() const { return mode_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int edge_a(int e) const { return edges_[e].first; }
  int edge_b(int e) const { return edges_[e].second; }
  bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // (edge id, other endpoint) sorted by edge id; a loop appears once.
  const std::vector<std::pair<int, int>>& incidence(int v) const { return inc_[v]; }
  int degree(int v) const;  // loops count twice

  // Shortest-path distance between vertices, in eighths.
  Len8 vdist8(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }

 private:
  void finish();  // builds incidence and the distance matrix

  Mode mode_ = Mode::Simple;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
  std::vector<Len8> dist_;
};

// Spec'd accessor form of the distance table (row per vertex, eighths).
std::vector<std::vector<Len8>> vertex_distance_matrix(const MetricGraph& g);

Len8 point_distance(const MetricGraph& g, GraphPoint p, GraphPoint q);

// Vertices first (by id), then interior offsets per edge (by edge id,
// ascending offset).  Deterministic.
std::vector<GraphPoint> grid_points(const MetricGraph& g, GridSpec grid);

bool is_tree(const MetricGraph& g);

// One traversed stretch of an edge, oriented along the path.
struct Seg {
  int e = 0;
  std::int32_t from8 = 0;
  std::int32_t to8 = 0;
  Len8 len8() const { return from8 < to8 ? to8 - from8 : from8 - to8; }
  friend auto operator<=>(const Seg&, const Seg&) = default;
};

struct GeodesicPath {
  GraphPoint start, end;
  std::vector<Seg> segs;  // contiguous from start to end
  Len8 total_len8 = 0;
};

GeodesicPath reversed(const GeodesicPath& p);

struct GeodesicList {
  std::vector<GeodesicPath> paths;  // lexicographic by segment sequence
  bool truncated = false;           // true when the cap cut the list short
};

// All distinct geodesics from p to q, in deterministic order, at most cap.
GeodesicList enumerate_geodesics(const MetricGraph& g, GraphPoint p, GraphPoint q, int cap = 256);

// Rendering used by reports and the CLI: "v3", "e2@3/8".
std::string point_str(GraphPoint p);
std::string len8_str(Len8 v);  // as units, lowest terms

}  // namespace ghyp
