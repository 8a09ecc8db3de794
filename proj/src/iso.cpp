#include "ghyp/iso.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace ghyp {

namespace {

struct Structure {
  int n = 0;
  std::vector<int> loops;           // loops per vertex
  std::vector<std::vector<int>> mult;  // multiplicity between vertex pairs
};

Structure structure_of(const MetricGraph& g) {
  Structure s;
  s.n = g.n();
  s.loops.assign(s.n, 0);
  s.mult.assign(s.n, std::vector<int>(s.n, 0));
  for (int e = 0; e < g.m(); ++e) {
    int a = g.edge_a(e), b = g.edge_b(e);
    if (a == b) {
      ++s.loops[a];
    } else {
      ++s.mult[a][b];
      ++s.mult[b][a];
    }
  }
  return s;
}

// Iterated colour refinement; colour ranks are structural, so isomorphic
// graphs refine to identical class layouts.
std::vector<int> refine_colors(const Structure& s) {
  std::vector<int> color(s.n, 0);
  for (int v = 0; v < s.n; ++v) {
    int deg = 2 * s.loops[v];
    for (int u = 0; u < s.n; ++u) deg += s.mult[v][u];
    color[v] = deg;
  }
  auto rerank = [&](std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(s.n);
    for (int v = 0; v < s.n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return next;
  };
  {
    std::vector<std::vector<int>> sig(s.n);
    for (int v = 0; v < s.n; ++v) sig[v] = {color[v], s.loops[v]};
    color = rerank(sig);
  }
  for (int round = 0; round < s.n; ++round) {
    std::vector<std::vector<int>> sig(s.n);
    for (int v = 0; v < s.n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < s.n; ++u)
        if (s.mult[v][u] > 0) nb.emplace_back(color[u], s.mult[v][u]);
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(color[v]);
      for (auto [c, k] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(k);
      }
    }
    std::vector<int> next = rerank(sig);
    if (next == color) break;
    color = next;
  }
  return color;
}

// Encoding under a fixed order: loop counts on the diagonal walk, then the
// strict upper triangle row by row.
struct CanonSearch {
  const Structure& s;
  std::vector<int> color;
  std::vector<int> perm;       // perm[k] = original vertex at position k
  std::vector<bool> used;
  std::vector<int> code;       // code under construction
  std::vector<int> best;       // minimal complete code so far
  bool have_best = false;

  explicit CanonSearch(const Structure& st) : s(st), color(refine_colors(st)) {
    perm.reserve(s.n);
    used.assign(s.n, false);
  }

  // Cells must be filled in ascending colour rank to keep the order set
  // isomorphism-invariant.
  int next_color() const {
    int best_c = -1;
    for (int v = 0; v < s.n; ++v)
      if (!used[v] && (best_c < 0 || color[v] < best_c)) best_c = color[v];
    return best_c;
  }

  void run() {
    if (s.n == 0) {
      have_best = true;
      return;
    }
    descend();
    assert(have_best);
  }

  void descend() {
    int k = static_cast<int>(perm.size());
    if (k == s.n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    int c = next_color();
    for (int v = 0; v < s.n; ++v) {
      if (used[v] || color[v] != c) continue;
      size_t mark = code.size();
      code.push_back(s.loops[v]);
      for (int i = 0; i < k; ++i) code.push_back(s.mult[perm[i]][v]);
      // Prune only when the whole prefix already exceeds the incumbent.
      bool worse = false;
      if (have_best) {
        for (size_t i = 0; i < code.size(); ++i) {
          if (code[i] < best[i]) break;
          if (code[i] > best[i]) {
            worse = true;
            break;
          }
        }
      }
      if (!worse) {
        used[v] = true;
        perm.push_back(v);
        descend();
        perm.pop_back();
        used[v] = false;
      }
      code.resize(mark);
    }
  }
};

}  // namespace

std::string canonical_code(const MetricGraph& g) {
  Structure s = structure_of(g);
  CanonSearch search(s);
  search.run();
  std::ostringstream os;
  os << s.n << ":";
  for (size_t i = 0; i < search.best.size(); ++i) {
    if (i) os << ",";
    os << search.best[i];
  }
  return os.str();
}

bool isomorphic(const MetricGraph& a, const MetricGraph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::string canonical_edge_list(const MetricGraph& g) {
  Structure s = structure_of(g);
  CanonSearch search(s);
  search.run();
  // Rebuild the canonical adjacency from the winning code.
  std::ostringstream os;
  os << "n=" << s.n << ";";
  bool first = true;
  size_t pos = 0;
  std::vector<std::vector<int>> mult(s.n, std::vector<int>(s.n, 0));
  std::vector<int> loops(s.n, 0);
  for (int k = 0; k < s.n; ++k) {
    loops[k] = search.best[pos++];
    for (int i = 0; i < k; ++i) {
      mult[i][k] = search.best[pos++];
    }
  }
  for (int i = 0; i < s.n; ++i) {
    for (int r = 0; r < loops[i]; ++r) {
      if (!first) os << ",";
      os << i << "-" << i;
      first = false;
    }
    for (int j = i + 1; j < s.n; ++j)
      for (int r = 0; r < mult[i][j]; ++r) {
        if (!first) os << ",";
        os << i << "-" << j;
        first = false;
      }
  }
  return os.str();
}

}  // namespace ghyp
