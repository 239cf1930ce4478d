#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "twsparse/routing.hpp"

namespace twsparse {

namespace {

using Mask = std::uint32_t;

struct Solver {
  int n;
  std::vector<Mask> adj;
  Mask all;
  int k = 0;
  std::unordered_set<Mask> failed;

  // Neighbours of v in the graph obtained by eliminating the set S.
  Mask q(Mask S, int v) const {
    Mask seen = Mask{1} << v | adj[v];
    Mask result = adj[v] & ~S;
    Mask stack = adj[v] & S;
    while (stack) {
      const int x = std::countr_zero(stack);
      stack &= stack - 1;
      const Mask nb = adj[x] & ~seen;
      seen |= nb;
      result |= nb & ~S;
      stack |= nb & S;
    }
    return result & ~(Mask{1} << v);
  }

  bool search(Mask S) {
    const Mask rest = all & ~S;
    if (std::popcount(rest) <= k + 1) return true;
    if (failed.count(S)) return false;
    std::vector<std::pair<int, Mask>> options;
    for (Mask m = rest; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Mask qv = q(S, v);
      if (std::popcount(qv) > k) continue;
      bool clique = true;
      for (Mask w = qv; w && clique; w &= w - 1) {
        const int x = std::countr_zero(w);
        const Mask others = qv & ~(Mask{1} << x);
        clique = (q(S, x) & others) == others;
      }
      if (clique) {
        const bool ok = search(S | Mask{1} << v);
        if (!ok) failed.insert(S);
        return ok;
      }
      options.emplace_back(v, qv);
    }
    for (auto [v, qv] : options) {
      if (search(S | Mask{1} << v)) return true;
    }
    failed.insert(S);
    return false;
  }
};

int min_fill_width(int n, std::vector<Mask> adj) {
  Mask alive = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  int width = 0;
  while (alive) {
    int best = -1;
    int best_fill = 0;
    for (Mask m = alive; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Mask nb = adj[v] & alive;
      int fill = 0;
      for (Mask w = nb; w; w &= w - 1) {
        const int x = std::countr_zero(w);
        fill += std::popcount(nb & ~adj[x] & ~(Mask{1} << x));
      }
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    const Mask nb = adj[best] & alive;
    width = std::max(width, std::popcount(nb));
    for (Mask w = nb; w; w &= w - 1) {
      const int x = std::countr_zero(w);
      adj[x] |= nb & ~(Mask{1} << x);
    }
    alive &= ~(Mask{1} << best);
  }
  return width;
}

int contraction_degeneracy(int n, std::vector<Mask> adj) {
  Mask alive = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  int lb = 0;
  while (std::popcount(alive) > 1) {
    int v = -1;
    for (Mask m = alive; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      if (v < 0 || std::popcount(adj[x] & alive) < std::popcount(adj[v] & alive)) v = x;
    }
    const Mask nb = adj[v] & alive;
    lb = std::max(lb, std::popcount(nb));
    if (nb) {
      int u = -1;
      for (Mask m = nb; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        if (u < 0 || std::popcount(adj[x] & alive) < std::popcount(adj[u] & alive)) u = x;
      }
      const Mask merged = (adj[u] | nb) & ~(Mask{1} << u) & ~(Mask{1} << v);
      adj[u] = merged;
      for (Mask m = merged; m; m &= m - 1) adj[std::countr_zero(m)] |= Mask{1} << u;
    }
    alive &= ~(Mask{1} << v);
  }
  return lb;
}

}  // namespace

int exact_treewidth(const Graph& g) {
  const std::vector<VertexId> verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n > 32) throw ArgumentError("exact_treewidth supports at most 32 vertices");
  if (n <= 1) return 0;
  std::map<VertexId, int> index;
  for (int i = 0; i < n; ++i) index[verts[i]] = i;
  Solver s{n, std::vector<Mask>(n, 0), n == 32 ? ~Mask{0} : (Mask{1} << n) - 1, 0, {}};
  for (const auto& [id, e] : g.edges()) {
    s.adj[index[e.u]] |= Mask{1} << index[e.v];
    s.adj[index[e.v]] |= Mask{1} << index[e.u];
  }
  const int lb = contraction_degeneracy(n, s.adj);
  const int ub = min_fill_width(n, s.adj);
  for (s.k = lb; s.k < ub; ++s.k) {
    s.failed.clear();
    if (s.search(0)) return s.k;
  }
  return ub;
}

}  // namespace twsparse
