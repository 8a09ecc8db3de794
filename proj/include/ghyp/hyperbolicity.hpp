#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghyp/metric_graph.hpp"
#include "ghyp/rational.hpp"

namespace ghyp {

// Thinness values live on a half-eighth grid once envelope crossings are
// taken into account, so they are carried as integers in sixteenths.
using Len16 = std::int64_t;

inline Rat units16(Len16 v) { return Rat(v, 16); }

struct GeodesicTriangle {
  GraphPoint corner[3];
  // side[0]: corner0 -> corner1, side[1]: corner1 -> corner2,
  // side[2]: corner2 -> corner0.  A side between equal corners is empty.
  GeodesicPath side[3];
};

struct ThinnessWitness {
  int side = 0;
  Len16 offset16 = 0;  // along the side from its start corner
};

struct ThinnessResult {
  Len16 value16 = 0;
  ThinnessWitness at;
};

// Sharp thin constant of one triangle: max over sides of the farthest
// point from the union of the other two sides.  Exact, via piecewise
// linear envelopes sampled on the half-eighth grid that contains every
// breakpoint.  Throws SideNotGeodesic if a side is longer than the
// distance between its corners.
ThinnessResult triangle_thinness(const MetricGraph& g, const GeodesicTriangle& t);

enum class DeltaMethod { Exact, Blocks, Cactus, FourPoint };

struct EnumerationOptions {
  int geodesic_cap = 256;  // per corner pair
  bool cycle_prune = true; // keep only side triples forming a closed curve
  GridSpec resolution{2};  // corner grid
  int threads = 1;
};

struct DeltaStats {
  std::int64_t triples = 0;  // corner multisets enumerated
  std::int64_t combos = 0;   // side combinations evaluated
  bool truncated = false;    // some geodesic list hit the cap
};

struct DeltaReport {
  Len16 delta16 = 0;
  DeltaMethod method = DeltaMethod::Exact;
  std::optional<GeodesicTriangle> witness;
  std::optional<ThinnessWitness> witness_point;
  DeltaStats stats;

  Rat delta() const { return units16(delta16); }
};

// Exact hyperbolicity constant by enumeration of geodesic triangles with
// corners on the configured grid.  A truncated report is a certified
// lower bound.
DeltaReport delta_exact(const MetricGraph& g, const EnumerationOptions& opts = {});

// Maximum of delta_exact over the two-connected blocks; the witness is
// lifted back into the host graph.
DeltaReport delta_via_blocks(const MetricGraph& g, const EnumerationOptions& opts = {});

// Closed form circumference/4 for graphs whose cycles are pairwise
// edge-disjoint; throws NotProperCycles otherwise.
DeltaReport delta_cactus(const MetricGraph& g);

// Four-point lower-bound screen over vertex quadruples; never a
// substitute for the exact value.
DeltaReport delta_four_point(const MetricGraph& g);

const char* method_name(DeltaMethod m);

}  // namespace ghyp
