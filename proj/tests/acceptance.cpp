#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "ghyp/generators.hpp"
#include "ghyp/hyperbolicity.hpp"
#include "ghyp/iso.hpp"
#include "ghyp/metric_graph.hpp"
#include "ghyp/minors.hpp"
#include "ghyp/textio.hpp"
#include "ghyp/verification.hpp"
#include "oracles.hpp"

using namespace ghyp;

namespace {

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

int failures = 0;
std::string detail;

void report(int id, const char* what, bool ok, double secs) {
  std::printf("%s %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, what, secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
  detail.clear();
}

void criterion(int id, const char* what, const std::function<bool()>& body) {
  Clock cl;
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string("threw: ") + e.what();
  }
  report(id, what, ok, cl.secs());
}

bool expect(bool cond, const std::string& msg) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

DeltaReport delta_untruncated(const MetricGraph& g) {
  EnumerationOptions opts;
  DeltaReport rep = delta_exact(g, opts);
  while (rep.stats.truncated && opts.geodesic_cap < (1 << 16)) {
    opts.geodesic_cap *= 2;
    rep = delta_exact(g, opts);
  }
  return rep;
}

}  // namespace

int main() {
  std::string sweep6_serial, sweep6_parallel;

  criterion(1, "cycle deltas equal length over four, each under five seconds", [&] {
    for (int n = 3; n <= 10; ++n) {
      Clock one;
      DeltaReport r = delta_exact(cycle_graph(n));
      if (!expect(r.delta16 == 4 * n, "C" + std::to_string(n) + " gave " + r.delta().str()))
        return false;
      if (!expect(one.secs() < 5.0, "C" + std::to_string(n) + " too slow")) return false;
    }
    return true;
  });

  criterion(2, "all 48 trees up to eight vertices are zero hyperbolic, each under a second", [&] {
    int seen = 0;
    for (int n = 1; n <= 8; ++n)
      for (const MetricGraph& t : all_trees(n)) {
        Clock one;
        DeltaReport r = delta_exact(t);
        ++seen;
        if (!expect(r.delta16 == 0, "a tree on " + std::to_string(n) + " vertices gave " +
                                        r.delta().str()))
          return false;
        if (!expect(one.secs() < 1.0, "tree delta too slow")) return false;
      }
    return expect(seen == 48, "expected 48 trees, saw " + std::to_string(seen));
  });

  criterion(3, "wheel deltas follow the 1, 5/4, 3/2 pattern with the drop at eleven", [&] {
    const Len16 want[] = {16, 16, 20, 24, 24, 24, 24, 20};  // W4..W11
    for (int n = 4; n <= 11; ++n) {
      DeltaReport r = delta_untruncated(wheel_graph(n));
      if (!expect(!r.stats.truncated, "W" + std::to_string(n) + " stayed truncated"))
        return false;
      if (!expect(r.delta16 == want[n - 4],
                  "W" + std::to_string(n) + " gave " + r.delta().str()))
        return false;
    }
    return true;
  });

  criterion(4, "contracting a rim edge of the eleven wheel raises delta to the ten wheel's", [&] {
    MetricGraph w11 = wheel_graph(11);
    ContractionResult c = contract_edge(w11, 10);  // rim edge between vertices 1 and 2
    return expect(isomorphic(c.quotient, wheel_graph(10)), "quotient is not the ten wheel") &&
           expect(delta_exact(w11).delta16 == 20, "W11 delta is not 5/4") &&
           expect(delta_exact(c.quotient).delta16 == 24, "contracted delta is not 3/2");
  });

  criterion(5, "the diamond meets the contraction upper bound with equality", [&] {
    MetricGraph dia = diamond_graph();
    ContractionResult c = contract_edge(dia, 0);
    CheckReport r = check_contraction_delta_bounds(dia, 0);
    bool sharp_upper = false;
    for (const std::string& t : r.sharp) sharp_upper = sharp_upper || t == "upper-equality";
    return expect(delta_exact(dia).delta16 == 16, "diamond delta is not 1") &&
           expect(delta_exact(c.quotient).delta16 == 0, "contracted diamond is not a tree") &&
           expect(r.holds, "bound check failed") &&
           expect(sharp_upper, "upper bound not attained with equality");
  });

  criterion(6, "all 35 theta graphs match (c + min(b, 3a))/4 and the pole deletion jumps", [&] {
    int seen = 0;
    for (int a = 1; a <= 5; ++a)
      for (int b = a; b <= 5; ++b)
        for (int c = b; c <= 5; ++c) {
          MetricGraph th = theta_graph(a, b, c);
          Len16 want = 4 * (c + std::min(b, 3 * a));
          DeltaReport r = delta_exact(th);
          ++seen;
          if (!expect(r.delta16 == want, "theta(" + std::to_string(a) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ") gave " +
                                             r.delta().str()))
            return false;
        }
    if (!expect(seen == 35, "expected 35 theta graphs")) return false;
    MetricGraph th = theta_graph(1, 4, 4);
    MetricGraph stripped = delete_edge(th, 0);
    return expect(isomorphic(stripped, cycle_graph(8)), "removing the pole edge did not leave C8") &&
           expect(delta_exact(th).delta16 == 28, "theta(1,4,4) delta is not 7/4") &&
           expect(delta_exact(stripped).delta16 == 32, "deletion did not raise delta to 2");
  });

  criterion(7, "every bound holds over all simple graphs up to six vertices", [&] {
    SweepSummary s = sweep_up_to(6, Mode::Simple, default_checks(Mode::Simple), 8);
    sweep6_parallel = render_sweep_text(s);
    return expect(s.graphs == 143, "expected 143 graphs, saw " + std::to_string(s.graphs)) &&
           expect(s.violations.empty(),
                  std::to_string(s.violations.size()) + " violations reported");
  });

  criterion(8, "every bound holds over all multigraphs up to four vertices", [&] {
    SweepSummary s = sweep_up_to(4, Mode::Multi, default_checks(Mode::Multi));
    MetricGraph two = MetricGraph::from_compact(2, {{0, 1}, {0, 1}}, Mode::Multi);
    ContractionResult c = contract_edge(two, 0);
    return expect(s.graphs == 629, "expected 629 graphs, saw " + std::to_string(s.graphs)) &&
           expect(s.violations.empty(),
                  std::to_string(s.violations.size()) + " violations reported") &&
           expect(delta_exact(two).delta16 == 8, "parallel pair delta is not 1/2") &&
           expect(delta_exact(c.quotient).delta16 == 4, "loop delta is not 1/4");
  });

  criterion(9, "analytic thinness matches 16x subdivision sampling on 100 random triangles", [&] {
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
      testing::RandomTriangle rt = testing::random_triangle(seed);
      Len16 analytic = triangle_thinness(rt.g, rt.t).value16;
      Len16 sampled = testing::sampled_thinness(rt.g, rt.t);
      if (!expect(analytic >= sampled && analytic <= sampled + 1,
                  "seed " + std::to_string(seed) + ": analytic " + std::to_string(analytic) +
                      " vs sampled " + std::to_string(sampled) + " sixteenths"))
        return false;
    }
    return true;
  });

  criterion(10, "one worker and eight workers render byte-identical sweeps", [&] {
    SweepSummary s = sweep_up_to(6, Mode::Simple, default_checks(Mode::Simple), 1);
    sweep6_serial = render_sweep_text(s);
    return expect(!sweep6_parallel.empty(), "parallel sweep text missing") &&
           expect(sweep6_serial == sweep6_parallel, "renderings differ");
  });

  if (failures) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
