#pragma once

#include <cstdint>
#include <vector>

#include "ghyp/metric_graph.hpp"

namespace ghyp {

MetricGraph path_graph(int n);      // n >= 2 vertices, n-1 edges
MetricGraph cycle_graph(int n);     // n >= 3
MetricGraph complete_graph(int n);  // n >= 2

// Hub vertex 0 joined to every vertex of a cycle on n-1 rim vertices;
// n vertices total (wheel indexing counts the hub).
MetricGraph wheel_graph(int n);  // n >= 4

// Two poles joined by three internally disjoint paths of lengths
// a <= b <= c.  a = b = 1 needs parallel pole edges, so that case comes
// out in Multi mode; everything else is Simple.
MetricGraph theta_graph(int a, int b, int c);

// K4 minus one edge; edge 0 joins the two degree-3 vertices.
MetricGraph diamond_graph();

// Seed-deterministic connected simple graph: random spanning tree plus
// random extra edges up to m.
MetricGraph random_connected(int n, int m, std::uint32_t seed);

// One representative per isomorphism class, sorted by canonical code.
std::vector<MetricGraph> all_connected(int n);  // connected simple graphs
std::vector<MetricGraph> all_trees(int n);
// Connected multigraphs with edge multiplicity <= 2 and at most one loop
// per vertex.
std::vector<MetricGraph> all_connected_multi(int n);

}  // namespace ghyp
