#include "ghyp/textio.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

#include "ghyp/errors.hpp"

namespace ghyp {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
  fail(Errc::BadInput, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ParsedGraph parse_graph_text(std::istream& in, std::optional<Mode> force_mode) {
  std::vector<std::pair<int, int>> raw;
  std::optional<Mode> directive;
  bool saw_edge = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream iss(line);
    std::string first;
    iss >> first;
    if (first == "mode") {
      if (saw_edge || directive) bad_line(lineno, "mode directive must be the first line");
      std::string which, extra;
      iss >> which;
      if (iss >> extra) bad_line(lineno, "expected 'mode simple' or 'mode multi'");
      if (which == "simple")
        directive = Mode::Simple;
      else if (which == "multi")
        directive = Mode::Multi;
      else
        bad_line(lineno, "unknown mode '" + which + "'");
      continue;
    }

    long long a = 0, b = 0;
    std::istringstream ed(line);
    std::string extra;
    if (!(ed >> a >> b) || (ed >> extra))
      bad_line(lineno, "expected two vertex labels, got '" + line + "'");
    if (a < 0 || b < 0) bad_line(lineno, "vertex labels must be non-negative");
    if (a > INT32_MAX || b > INT32_MAX) bad_line(lineno, "vertex label out of range");
    raw.emplace_back(static_cast<int>(a), static_cast<int>(b));
    saw_edge = true;
  }

  Mode mode = force_mode.value_or(directive.value_or(Mode::Simple));
  ParsedGraph pg;
  pg.graph = MetricGraph::from_edges(raw, mode, &pg.raw_label);
  for (std::size_t i = 0; i < pg.raw_label.size(); ++i)
    pg.to_dense[pg.raw_label[i]] = static_cast<int>(i);
  return pg;
}

std::string emit_graph_text(const MetricGraph& g, const std::vector<int>* labels) {
  std::ostringstream os;
  if (g.mode() == Mode::Multi) os << "mode multi\n";
  for (int e = 0; e < g.m(); ++e) {
    int a = g.edge_a(e), b = g.edge_b(e);
    if (labels) {
      a = (*labels)[static_cast<std::size_t>(a)];
      b = (*labels)[static_cast<std::size_t>(b)];
    }
    os << a << " " << b << "\n";
  }
  return os.str();
}

std::string emit_contraction_text(const ContractionResult& c, const std::vector<int>& old_labels) {
  std::ostringstream os;
  for (std::size_t v = 0; v < c.vertex_map.size(); ++v)
    os << "# vertex_map " << old_labels[v] << " " << c.vertex_map[v] << "\n";
  os << emit_graph_text(c.quotient);
  return os.str();
}

namespace {

std::string seg_str(const Seg& s) {
  return "e" + std::to_string(s.e) + ":" + std::to_string(s.from8) + "-" + std::to_string(s.to8);
}

bool stats_apply(const DeltaReport& r) {
  return r.method == DeltaMethod::Exact || r.method == DeltaMethod::Blocks;
}

json delta_obj(const DeltaReport& r) {
  json j;
  j["delta"] = r.delta().str();
  j["method"] = method_name(r.method);
  if (stats_apply(r)) {
    j["stats"] = {{"triples", r.stats.triples},
                  {"combos", r.stats.combos},
                  {"truncated", r.stats.truncated}};
  }
  if (r.witness) {
    json w;
    json corners = json::array();
    json sides = json::array();
    for (int s = 0; s < 3; ++s) {
      corners.push_back(point_str(r.witness->corner[s]));
      json side = json::array();
      for (const Seg& sg : r.witness->side[s].segs) side.push_back(seg_str(sg));
      sides.push_back(side);
    }
    w["corners"] = corners;
    w["sides"] = sides;
    if (r.witness_point) {
      w["farthest"] = {{"side", r.witness_point->side},
                       {"offset", units16(r.witness_point->offset16).str()}};
    }
    j["witness"] = w;
  }
  return j;
}

json check_obj(const CheckReport& r) {
  json j;
  j["check"] = check_name(r.check);
  j["graph"] = r.graph;
  j["mode"] = mode_name(r.mode);
  if (r.edge) j["edge"] = {{"id", *r.edge}, {"u", r.edge_u}, {"v", r.edge_v}};
  j["status"] = r.holds ? "holds" : "violated";
  json vals = json::array();
  for (const auto& [k, v] : r.values) vals.push_back(json::array({k, v.str()}));
  j["values"] = vals;
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["sharp"] = r.sharp;
  return j;
}

}  // namespace

std::string render_delta_text(const DeltaReport& r) {
  std::ostringstream os;
  os << "delta = " << r.delta().str() << "\n";
  os << "method = " << method_name(r.method) << "\n";
  if (r.witness) {
    os << "corners =";
    for (int s = 0; s < 3; ++s) os << " " << point_str(r.witness->corner[s]);
    os << "\n";
    if (r.witness_point) {
      os << "farthest = side " << r.witness_point->side << " offset "
         << units16(r.witness_point->offset16).str() << "\n";
    }
  }
  if (stats_apply(r)) {
    os << "triples = " << r.stats.triples << "\n";
    os << "combos = " << r.stats.combos << "\n";
    os << "truncated = " << (r.stats.truncated ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string render_delta_json(const DeltaReport& r) { return delta_obj(r).dump(2); }

std::string render_check_line(const CheckReport& r) {
  std::ostringstream os;
  os << "check name=" << check_name(r.check) << " graph=" << r.graph
     << " mode=" << mode_name(r.mode);
  if (r.edge) os << " edge=" << *r.edge << ":" << r.edge_u << "-" << r.edge_v;
  os << " status=" << (r.holds ? "holds" : "violated");
  for (const auto& [k, v] : r.values) os << " " << k << "=" << v.str();
  if (!r.witness.empty()) os << " witness=" << r.witness;
  if (!r.sharp.empty()) {
    os << " sharp=";
    for (std::size_t i = 0; i < r.sharp.size(); ++i) {
      if (i) os << ",";
      os << r.sharp[i];
    }
  }
  return os.str();
}

std::string render_check_json(const CheckReport& r) { return check_obj(r).dump(2); }

std::string render_sweep_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "sweep family=" << s.family << " graphs=" << s.graphs
     << " violations=" << s.violations.size() << "\n";
  for (const CheckStat& st : s.stats)
    os << "stats name=" << check_name(st.check) << " runs=" << st.runs << " holds=" << st.holds
       << "\n";
  for (const CheckReport& r : s.violations) os << render_check_line(r) << "\n";
  for (const SharpHit& h : s.sharpness)
    os << "sharp graph=" << h.graph << " check=" << check_name(h.check) << " tag=" << h.tag
       << "\n";
  return os.str();
}

std::string render_sweep_json(const SweepSummary& s) {
  json j;
  j["family"] = s.family;
  j["graphs"] = s.graphs;
  json stats = json::array();
  for (const CheckStat& st : s.stats)
    stats.push_back({{"name", check_name(st.check)}, {"runs", st.runs}, {"holds", st.holds}});
  j["checks"] = stats;
  json viol = json::array();
  for (const CheckReport& r : s.violations) viol.push_back(check_obj(r));
  j["violations"] = viol;
  json sharp = json::array();
  for (const SharpHit& h : s.sharpness)
    sharp.push_back({{"graph", h.graph}, {"check", check_name(h.check)}, {"tag", h.tag}});
  j["sharpness"] = sharp;
  return j.dump(2);
}

std::string render_witnesses_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const CheckReport& r : reports) os << render_check_line(r) << "\n";
  return os.str();
}

std::string render_witnesses_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const CheckReport& r : reports) arr.push_back(check_obj(r));
  return arr.dump(2);
}

}  // namespace ghyp
