#include <algorithm>
#include <limits>
#include <map>

#include "flow.hpp"
#include "twsparse/routing.hpp"

namespace twsparse {

using detail::MaxFlow;

CutReport min_edge_cut(const Graph& g, const std::set<VertexId>& X, const std::set<VertexId>& Y) {
  for (VertexId x : X) {
    if (Y.count(x)) throw ArgumentError("min_edge_cut: vertex " + std::to_string(x) + " on both sides");
  }
  const std::vector<VertexId> verts = g.vertices();
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
  const int n = static_cast<int>(verts.size());
  MaxFlow flow(n + 2);
  for (const auto& [id, e] : g.edges()) {
    flow.add_arc(index[e.u], index[e.v], 1);
    flow.add_arc(index[e.v], index[e.u], 1);
  }
  for (VertexId x : X) flow.add_arc(n, index.at(x), MaxFlow::kInf);
  for (VertexId y : Y) flow.add_arc(index.at(y), n + 1, MaxFlow::kInf);
  const std::int64_t value = flow.run(n, n + 1);
  const std::vector<bool> reach = flow.reachable(n);
  CutReport r;
  for (int i = 0; i < n; ++i) {
    if (reach[i]) r.side.insert(verts[i]);
  }
  r.crossing = static_cast<std::size_t>(value);
  r.objective = static_cast<double>(value);
  r.certificate = CutCertificate::flow;
  return r;
}

CutReport global_min_cut(int n, const std::vector<WeightedEdge>& edges) {
  if (n < 2) throw ArgumentError("global_min_cut needs at least two vertices");
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const WeightedEdge& e : edges) {
    if (e.u == e.v) continue;
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) members[i] = {i};
  std::vector<bool> merged(n, false);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_side;

  for (int phase = 0; phase < n - 1; ++phase) {
    std::vector<double> key(n, 0.0);
    std::vector<bool> added(n, false);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < n - phase; ++step) {
      int sel = -1;
      for (int v = 0; v < n; ++v) {
        if (!merged[v] && !added[v] && (sel < 0 || key[v] > key[sel])) sel = v;
      }
      added[sel] = true;
      prev = last;
      last = sel;
      for (int v = 0; v < n; ++v) {
        if (!merged[v] && !added[v]) key[v] += w[sel][v];
      }
    }
    if (key[last] < best - 1e-12) {
      best = key[last];
      best_side = members[last];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    merged[last] = true;
    for (int v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0.0;
  }

  CutReport r;
  // Report the side holding vertex 0.
  std::vector<bool> in(n, false);
  for (int v : best_side) in[v] = true;
  const bool flip = !in[0];
  for (int v = 0; v < n; ++v) {
    if (in[v] != flip) r.side.insert(v);
  }
  std::size_t crossing = 0;
  for (const WeightedEdge& e : edges) {
    if ((r.side.count(e.u) != 0) != (r.side.count(e.v) != 0)) ++crossing;
  }
  r.crossing = crossing;
  r.objective = best;
  r.certificate = CutCertificate::stoer_wagner;
  return r;
}

CutReport global_min_cut(const Graph& g) {
  const std::vector<VertexId> verts = g.vertices();
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
  std::vector<WeightedEdge> edges;
  for (const auto& [id, e] : g.edges()) edges.push_back({index[e.u], index[e.v], 1.0});
  CutReport r = global_min_cut(static_cast<int>(verts.size()), edges);
  std::set<VertexId> side;
  for (int i : r.side) side.insert(verts[i]);
  r.side = std::move(side);
  return r;
}

}  // namespace twsparse
