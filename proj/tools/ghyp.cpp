#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghyp/errors.hpp"
#include "ghyp/generators.hpp"
#include "ghyp/hyperbolicity.hpp"
#include "ghyp/minors.hpp"
#include "ghyp/textio.hpp"
#include "ghyp/verification.hpp"

namespace {

using namespace ghyp;

ParsedGraph load_graph(const std::string& path, std::optional<Mode> force = {}) {
  if (path == "-") return parse_graph_text(std::cin, force);
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot open " + path);
  return parse_graph_text(in, force);
}

long long parse_ll(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::BadInput, "expected an integer, got '" + s + "'");
  }
}

std::optional<Mode> mode_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s == "multi" ? Mode::Multi : Mode::Simple;
}

// U,V with the labels used in the input file; picks the first matching edge.
int resolve_edge(const ParsedGraph& pg, const std::string& spec) {
  std::size_t comma = spec.find(',');
  if (comma == std::string::npos)
    fail(Errc::BadInput, "edge must be given as U,V, got '" + spec + "'");
  long long lu = parse_ll(spec.substr(0, comma));
  long long lv = parse_ll(spec.substr(comma + 1));
  auto dense = [&pg](long long label) {
    auto it = pg.to_dense.find(static_cast<int>(label));
    if (it == pg.to_dense.end())
      fail(Errc::BadInput, "vertex " + std::to_string(label) + " is not in the graph");
    return it->second;
  };
  int u = dense(lu), v = dense(lv);
  const MetricGraph& g = pg.graph;
  for (int e = 0; e < g.m(); ++e) {
    int a = g.edge_a(e), b = g.edge_b(e);
    if ((a == u && b == v) || (a == v && b == u)) return e;
  }
  fail(Errc::BadInput, "no edge " + spec + " in the graph");
}

void print_stream(const std::vector<MetricGraph>& graphs) {
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k) std::cout << "\n";
    std::cout << "# graph " << k << "\n" << emit_graph_text(graphs[k]);
  }
}

int run_gen(const std::string& family, const std::vector<std::string>& args) {
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      fail(Errc::BadInput, "family " + family + " takes " + std::to_string(n) +
                               (n == 1 ? " argument" : " arguments") + ", got " +
                               std::to_string(args.size()));
  };
  auto arg_int = [&](std::size_t i) { return static_cast<int>(parse_ll(args[i])); };

  if (family == "path" || family == "cycle" || family == "complete" || family == "wheel") {
    want(1);
    int n = arg_int(0);
    MetricGraph g = family == "path"      ? path_graph(n)
                    : family == "cycle"   ? cycle_graph(n)
                    : family == "complete" ? complete_graph(n)
                                           : wheel_graph(n);
    std::cout << emit_graph_text(g);
    return 0;
  }
  if (family == "theta") {
    want(3);
    std::cout << emit_graph_text(theta_graph(arg_int(0), arg_int(1), arg_int(2)));
    return 0;
  }
  if (family == "diamond") {
    want(0);
    std::cout << emit_graph_text(diamond_graph());
    return 0;
  }
  if (family == "random") {
    want(3);
    long long seed = parse_ll(args[2]);
    std::cout << emit_graph_text(
        random_connected(arg_int(0), arg_int(1), static_cast<std::uint32_t>(seed)));
    return 0;
  }
  if (family == "all" || family == "trees" || family == "multi") {
    want(1);
    int n = arg_int(0);
    print_stream(family == "all"     ? all_connected(n)
                 : family == "trees" ? all_trees(n)
                                     : all_connected_multi(n));
    return 0;
  }
  fail(Errc::BadInput, "unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gromov hyperbolicity for unit-edge metric graphs"};
  app.require_subcommand(1);

  std::string file, method = "exact", mode_str, edge_spec, check_str, checks_str, family;
  std::vector<std::string> gen_args;
  int cap = 256, resolution = 2, verify_resolution = 8, max_vertices = 0, parallel = 1;
  bool as_json = false;

  CLI::App* sc_delta = app.add_subcommand("delta", "exact hyperbolicity constant of a graph");
  sc_delta->add_option("file", file, "graph file, - for stdin")->required();
  sc_delta->add_option("--method", method, "exact, blocks, cactus or four-point")
      ->check(CLI::IsMember({"exact", "blocks", "cactus", "four-point"}));
  sc_delta->add_option("--cap", cap, "geodesics kept per point pair");
  sc_delta->add_option("--resolution", resolution, "corner grid density (1, 2, 4 or 8)");
  sc_delta->add_option("--parallel", parallel, "worker threads");
  sc_delta->add_flag("--json", as_json, "machine-readable output");

  CLI::App* sc_contract = app.add_subcommand("contract", "contract one edge");
  sc_contract->add_option("file", file, "graph file, - for stdin")->required();
  sc_contract->add_option("--edge", edge_spec, "edge as U,V in input labels")->required();
  sc_contract->add_option("--mode", mode_str, "override the file's mode directive")
      ->check(CLI::IsMember({"simple", "multi"}));

  CLI::App* sc_delete = app.add_subcommand("delete", "delete one non-cut edge");
  sc_delete->add_option("file", file, "graph file, - for stdin")->required();
  sc_delete->add_option("--edge", edge_spec, "edge as U,V in input labels")->required();

  CLI::App* sc_verify = app.add_subcommand("verify", "check one bound on one edge");
  sc_verify->add_option("file", file, "graph file, - for stdin")->required();
  sc_verify->add_option("--edge", edge_spec, "edge as U,V in input labels")->required();
  sc_verify->add_option("--check", check_str, "distances, contraction or deletion")
      ->required()
      ->check(CLI::IsMember({"distances", "contraction", "deletion"}));
  sc_verify->add_option("--resolution", verify_resolution,
                        "grid density for the distances check (1, 2, 4 or 8)");
  sc_verify->add_flag("--json", as_json, "machine-readable output");

  CLI::App* sc_sweep = app.add_subcommand("sweep", "exhaustive checks over all small graphs");
  sc_sweep->add_option("--max-vertices", max_vertices, "largest vertex count, from 1 up")
      ->required();
  sc_sweep->add_option("--mode", mode_str, "simple or multi")
      ->check(CLI::IsMember({"simple", "multi"}));
  sc_sweep->add_option("--checks", checks_str, "comma-separated subset of "
                       "distances,contraction,deletion,blocks,cactus");
  sc_sweep->add_option("--parallel", parallel, "worker threads");
  sc_sweep->add_flag("--json", as_json, "machine-readable output");

  CLI::App* sc_gen = app.add_subcommand("gen", "emit a named graph family");
  sc_gen->add_option("family", family,
                     "path|cycle|complete|wheel N, theta A B C, diamond, "
                     "random N M SEED, all|trees|multi N")
      ->required();
  sc_gen->add_option("args", gen_args, "family arguments");

  CLI::App* sc_witness = app.add_subcommand("witness", "the non-monotone delta examples");
  sc_witness->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*sc_delta) {
      ParsedGraph pg = load_graph(file);
      EnumerationOptions opts;
      opts.geodesic_cap = cap;
      opts.resolution = GridSpec{resolution};
      opts.threads = parallel;
      DeltaReport rep;
      if (method == "exact")
        rep = delta_exact(pg.graph, opts);
      else if (method == "blocks")
        rep = delta_via_blocks(pg.graph, opts);
      else if (method == "cactus")
        rep = delta_cactus(pg.graph);
      else
        rep = delta_four_point(pg.graph);
      std::cout << (as_json ? render_delta_json(rep) + "\n" : render_delta_text(rep));
      return 0;
    }
    if (*sc_contract) {
      ParsedGraph pg = load_graph(file, mode_opt(mode_str));
      ContractionResult c = contract_edge(pg.graph, resolve_edge(pg, edge_spec));
      std::cout << emit_contraction_text(c, pg.raw_label);
      return 0;
    }
    if (*sc_delete) {
      ParsedGraph pg = load_graph(file);
      MetricGraph gd = delete_edge(pg.graph, resolve_edge(pg, edge_spec));
      std::cout << emit_graph_text(gd, &pg.raw_label);
      return 0;
    }
    if (*sc_verify) {
      ParsedGraph pg = load_graph(file);
      int e = resolve_edge(pg, edge_spec);
      CheckReport rep;
      if (check_str == "distances")
        rep = check_contraction_distance_bounds(pg.graph, e, GridSpec{verify_resolution});
      else if (check_str == "contraction")
        rep = check_contraction_delta_bounds(pg.graph, e);
      else
        rep = check_deletion_delta_bounds(pg.graph, e);
      std::cout << (as_json ? render_check_json(rep) : render_check_line(rep)) << "\n";
      return rep.holds ? 0 : 1;
    }
    if (*sc_sweep) {
      Mode mode = mode_opt(mode_str).value_or(Mode::Simple);
      std::vector<CheckKind> checks;
      if (checks_str.empty()) {
        checks = default_checks(mode);
      } else {
        std::size_t pos = 0;
        while (pos <= checks_str.size()) {
          std::size_t comma = checks_str.find(',', pos);
          if (comma == std::string::npos) comma = checks_str.size();
          std::string name = checks_str.substr(pos, comma - pos);
          auto k = check_from_name(name);
          if (!k) fail(Errc::BadInput, "unknown check '" + name + "'");
          checks.push_back(*k);
          pos = comma + 1;
        }
      }
      SweepSummary s = sweep_up_to(max_vertices, mode, checks, parallel);
      std::cout << (as_json ? render_sweep_json(s) + "\n" : render_sweep_text(s));
      return s.violations.empty() ? 0 : 1;
    }
    if (*sc_gen) return run_gen(family, gen_args);
    if (*sc_witness) {
      std::vector<CheckReport> reps = nonmonotonicity_witnesses();
      std::cout << (as_json ? render_witnesses_json(reps) + "\n" : render_witnesses_text(reps));
      for (const CheckReport& r : reps)
        if (!r.holds) return 1;
      return 0;
    }
  } catch (const ghyp::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
