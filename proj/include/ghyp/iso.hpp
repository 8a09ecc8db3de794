#pragma once

#include <string>
#include <vector>

#include "ghyp/metric_graph.hpp"

namespace ghyp {

// Canonical labeling by colour refinement plus backtracking over
// colour-respecting orders, exact for any size we enumerate (<= ~12).
// The code determines the graph up to isomorphism (loops and edge
// multiplicities included); mode is semantic and not part of the code.
std::string canonical_code(const MetricGraph& g);

bool isomorphic(const MetricGraph& a, const MetricGraph& b);

// Human-readable form of the canonical structure, e.g. "n=4;0-1,0-2,1-2".
std::string canonical_edge_list(const MetricGraph& g);

}  // namespace ghyp
