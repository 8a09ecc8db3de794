#include "ghyp/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "ghyp/errors.hpp"
#include "ghyp/iso.hpp"

namespace ghyp {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void need(bool ok, const std::string& msg) {
  if (!ok) fail(Errc::InvalidSpec, msg);
}

// Dedup a batch of candidate graphs by canonical code and return them
// sorted by that code.
std::vector<MetricGraph> sort_classes(std::map<std::string, MetricGraph>&& by_code) {
  std::vector<MetricGraph> out;
  out.reserve(by_code.size());
  for (auto& [code, g] : by_code) out.push_back(std::move(g));
  return out;
}

}  // namespace

MetricGraph path_graph(int n) {
  need(n >= 2, "path graph needs at least 2 vertices, got " + std::to_string(n));
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return MetricGraph::from_compact(n, std::move(edges), Mode::Simple);
}

MetricGraph cycle_graph(int n) {
  need(n >= 3, "cycle graph needs at least 3 vertices, got " + std::to_string(n));
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return MetricGraph::from_compact(n, std::move(edges), Mode::Simple);
}

MetricGraph complete_graph(int n) {
  need(n >= 2, "complete graph needs at least 2 vertices, got " + std::to_string(n));
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return MetricGraph::from_compact(n, std::move(edges), Mode::Simple);
}

MetricGraph wheel_graph(int n) {
  need(n >= 4, "wheel graph needs at least 4 vertices, got " + std::to_string(n));
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 1);
  return MetricGraph::from_compact(n, std::move(edges), Mode::Simple);
}

MetricGraph theta_graph(int a, int b, int c) {
  need(a >= 1 && a <= b && b <= c,
       "theta graph needs 1 <= a <= b <= c, got " + std::to_string(a) + "," + std::to_string(b) +
           "," + std::to_string(c));
  Mode mode = (a == 1 && b == 1) ? Mode::Multi : Mode::Simple;
  EdgeList edges;
  int next = 2;  // poles are 0 and 1
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int k = 1; k < len; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return MetricGraph::from_compact(next, std::move(edges), mode);
}

MetricGraph diamond_graph() {
  return MetricGraph::from_compact(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}, Mode::Simple);
}

MetricGraph random_connected(int n, int m, std::uint32_t seed) {
  need(n >= 2, "random graph needs at least 2 vertices, got " + std::to_string(n));
  need(m >= n - 1 && m <= n * (n - 1) / 2,
       "random graph on " + std::to_string(n) + " vertices needs n-1 <= m <= n(n-1)/2, got " +
           std::to_string(m));
  std::mt19937 rng(seed);
  auto pick = [&rng](int k) { return static_cast<int>(rng() % static_cast<std::uint32_t>(k)); };
  std::set<std::pair<int, int>> have;
  EdgeList edges;
  for (int v = 1; v < n; ++v) {
    int u = pick(v);
    have.insert({u, v});
    edges.emplace_back(u, v);
  }
  while (static_cast<int>(edges.size()) < m) {
    int u = pick(n), v = pick(n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!have.insert({u, v}).second) continue;
    edges.emplace_back(u, v);
  }
  return MetricGraph::from_compact(n, std::move(edges), Mode::Simple);
}

std::vector<MetricGraph> all_connected(int n) {
  need(n >= 1, "vertex count must be positive, got " + std::to_string(n));
  // Grow representatives one vertex at a time: every connected graph has a
  // non-cut vertex, so attaching a new last vertex to each nonempty subset
  // of an (n-1)-vertex representative reaches every class.
  std::vector<MetricGraph> reps{MetricGraph::single_vertex()};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, MetricGraph> next;
    for (const MetricGraph& g : reps) {
      for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
        EdgeList edges = g.edges();
        for (int v = 0; v < k - 1; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, k - 1);
        MetricGraph cand = MetricGraph::from_compact(k, std::move(edges), Mode::Simple);
        std::string code = canonical_code(cand);
        next.emplace(std::move(code), std::move(cand));
      }
    }
    reps = sort_classes(std::move(next));
  }
  return reps;
}

std::vector<MetricGraph> all_trees(int n) {
  need(n >= 1, "vertex count must be positive, got " + std::to_string(n));
  std::vector<MetricGraph> reps{MetricGraph::single_vertex()};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, MetricGraph> next;
    for (const MetricGraph& g : reps)
      for (int v = 0; v < k - 1; ++v) {
        EdgeList edges = g.edges();
        edges.emplace_back(v, k - 1);
        MetricGraph cand = MetricGraph::from_compact(k, std::move(edges), Mode::Simple);
        std::string code = canonical_code(cand);
        next.emplace(std::move(code), std::move(cand));
      }
    reps = sort_classes(std::move(next));
  }
  return reps;
}

std::vector<MetricGraph> all_connected_multi(int n) {
  need(n >= 1, "vertex count must be positive, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int np = static_cast<int>(pairs.size());

  std::map<std::string, MetricGraph> classes;
  std::vector<int> mult(np, 0);
  // Odometer over multiplicities 0..2 per pair and loop bits per vertex.
  std::int64_t total = 1;
  for (int i = 0; i < np; ++i) total *= 3;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t t = code;
    for (int i = 0; i < np; ++i) {
      mult[i] = static_cast<int>(t % 3);
      t /= 3;
    }
    // Connectivity of the underlying simple graph (loops never connect).
    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int i = 0; i < np; ++i) {
        if (mult[i] == 0) continue;
        int other = -1;
        if (pairs[i].first == v) other = pairs[i].second;
        if (pairs[i].second == v) other = pairs[i].first;
        if (other >= 0 && comp[other] < 0) {
          comp[other] = 0;
          stack.push_back(other);
        }
      }
    }
    if (std::count(comp.begin(), comp.end(), 0) != n) continue;
    for (unsigned loops = 0; loops < (1u << n); ++loops) {
      EdgeList edges;
      for (int i = 0; i < np; ++i)
        for (int r = 0; r < mult[i]; ++r) edges.push_back(pairs[i]);
      for (int v = 0; v < n; ++v)
        if (loops & (1u << v)) edges.emplace_back(v, v);
      if (edges.empty() && n > 1) continue;
      MetricGraph cand = MetricGraph::from_compact(n, std::move(edges), Mode::Multi);
      std::string key = canonical_code(cand);
      classes.emplace(std::move(key), std::move(cand));
    }
  }
  return sort_classes(std::move(classes));
}

}  // namespace ghyp
