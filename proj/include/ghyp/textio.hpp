#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghyp/hyperbolicity.hpp"
#include "ghyp/metric_graph.hpp"
#include "ghyp/minors.hpp"
#include "ghyp/verification.hpp"

namespace ghyp {

// A graph read from the text format, keeping the original vertex labels.
struct ParsedGraph {
  MetricGraph graph;
  std::vector<int> raw_label;   // dense id -> label as written
  std::map<int, int> to_dense;  // label as written -> dense id
};

// Text format: '#' starts a comment, an optional leading directive line
// `mode simple|multi`, then one `u v` edge per line with non-negative
// integer labels.  force_mode overrides the directive.
ParsedGraph parse_graph_text(std::istream& in, std::optional<Mode> force_mode = {});

// Inverse of parse_graph_text; labels (dense id -> printed label) defaults
// to the identity.
std::string emit_graph_text(const MetricGraph& g, const std::vector<int>* labels = nullptr);

// Quotient graph in the text format, preceded by `# vertex_map old new`
// comment lines (old labels as printed in the input, new dense ids).
std::string emit_contraction_text(const ContractionResult& c, const std::vector<int>& old_labels);

// Multi-line `key = value` record; rationals in lowest terms, no decimals.
std::string render_delta_text(const DeltaReport& r);
std::string render_delta_json(const DeltaReport& r);

// One-line record: `check name=... graph=... mode=... status=... k=v ...`.
std::string render_check_line(const CheckReport& r);
std::string render_check_json(const CheckReport& r);

// One record per line: the sweep header, per-check stats, any violations
// as full check lines, then sharpness hits.  Byte-stable for a given
// summary regardless of how it was computed.
std::string render_sweep_text(const SweepSummary& s);
std::string render_sweep_json(const SweepSummary& s);

std::string render_witnesses_text(const std::vector<CheckReport>& reports);
std::string render_witnesses_json(const std::vector<CheckReport>& reports);

}  // namespace ghyp
