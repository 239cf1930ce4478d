#include "twsparse/cut_matching.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "twsparse/errors.hpp"

namespace twsparse::cmg {

std::vector<int> Expander::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

int Expander::max_degree() const {
  const std::vector<int> d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

ExpanderState::ExpanderState(int n_) : n(n_), flow(static_cast<std::size_t>(n_) * n_, 0.0) {
  if (n_ < 0) throw ArgumentError("expander size must be non-negative");
  x.n = n_;
  for (int v = 0; v < n_; ++v) flow[static_cast<std::size_t>(v) * n_ + v] = 1.0;
}

int default_rounds(int n) {
  if (n <= 1) return 0;
  const double l = std::log2(static_cast<double>(n));
  return static_cast<int>(std::ceil(10.0 * l * l));
}

Partition cut_player_partition(ExpanderState& st, Rng& rng) {
  const int n = st.n;
  if (n % 2 != 0 || n == 0) throw ArgumentError("cut player needs an even positive N, got " + std::to_string(n));
  std::vector<double> r(n);
  for (double& x : r) x = rng.normal();
  std::vector<double> proj(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const double* row = &st.flow[static_cast<std::size_t>(v) * n];
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += row[k] * r[k];
    proj[v] = s;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return proj[a] != proj[b] ? proj[a] < proj[b] : a < b;
  });
  std::vector<int> low(order.begin(), order.begin() + n / 2);
  std::vector<int> high(order.begin() + n / 2, order.end());
  std::sort(low.begin(), low.end());
  std::sort(high.begin(), high.end());
  Partition p;
  if (low.front() == 0) {
    p.Y = std::move(low);
    p.Z = std::move(high);
  } else {
    p.Y = std::move(high);
    p.Z = std::move(low);
  }
  st.pending = p;
  return p;
}

void play_round(ExpanderState& st, const Matching& m) {
  if (!st.pending) throw ProtocolError("no partition pending");
  const Partition& p = *st.pending;
  const int n = st.n;
  std::vector<int> side(n, -1);
  for (int y : p.Y) side[y] = 0;
  for (int z : p.Z) side[z] = 1;
  if (static_cast<int>(m.size()) * 2 != n) {
    throw ProtocolError("matching has " + std::to_string(m.size()) + " pairs, expected " +
                        std::to_string(n / 2));
  }
  std::vector<bool> used(n, false);
  for (auto [y, z] : m) {
    if (y < 0 || y >= n || z < 0 || z >= n) throw ProtocolError("matching vertex out of range");
    if (side[y] != 0 || side[z] != 1) {
      throw ProtocolError("pair (" + std::to_string(y) + ", " + std::to_string(z) +
                          ") does not cross the partition");
    }
    if (used[y] || used[z]) throw ProtocolError("vertex matched twice");
    used[y] = used[z] = true;
  }
  for (auto [y, z] : m) {
    st.x.edges.emplace_back(y, z);
    double* a = &st.flow[static_cast<std::size_t>(y) * n];
    double* b = &st.flow[static_cast<std::size_t>(z) * n];
    for (int k = 0; k < n; ++k) {
      const double avg = 0.5 * (a[k] + b[k]);
      a[k] = avg;
      b[k] = avg;
    }
  }
  ++st.round;
  st.transcript.push_back({p, m});
  st.pending.reset();
  for (int d : st.x.degrees()) {
    if (d != st.round) throw InvariantError("expander degree differs from round count");
  }
}

GameResult run_game(int n, int rounds, const MatchingOracle& oracle, Rng& rng) {
  if (n % 2 != 0) throw ArgumentError("cut-matching game needs even N, got " + std::to_string(n));
  ExpanderState st(n);
  for (int j = 0; j < rounds; ++j) {
    const Partition p = cut_player_partition(st, rng);
    play_round(st, oracle(p));
  }
  return {st.x, st.transcript};
}

Expander replay(int n, const std::vector<Round>& transcript) {
  ExpanderState st(n);
  for (const Round& r : transcript) {
    std::vector<int> all = r.partition.Y;
    all.insert(all.end(), r.partition.Z.begin(), r.partition.Z.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    if (all != expect || r.partition.Y.size() != r.partition.Z.size()) {
      throw ProtocolError("transcript partition is not a balanced bipartition");
    }
    st.pending = r.partition;
    play_round(st, r.matching);
  }
  return st.x;
}

ExpansionResult expansion(const Expander& x, std::uint64_t budget) {
  const int n = x.n;
  ExpansionResult res;
  if (n <= 1 || x.edges.empty()) {
    res.value = 0.0;
    if (n >= 1) res.side = {0};
    return res;
  }
  if (n > 63 || (std::uint64_t{1} << (n - 1)) > budget) {
    res.value = spectral_lower_bound(x);
    res.exact = false;
    return res;
  }
  std::vector<std::uint64_t> ends;
  ends.reserve(x.edges.size());
  for (auto [u, v] : x.edges) ends.push_back(std::uint64_t{1} << u | std::uint64_t{1} << v);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  // Vertex n-1 stays outside; the complement covers the other orientation.
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << (n - 1)); ++m) {
    long long cut = 0;
    for (std::uint64_t e : ends) {
      const std::uint64_t in = e & m;
      if (in != 0 && in != e) ++cut;
    }
    const int s = std::popcount(m);
    const int small = std::min(s, n - s);
    const double val = static_cast<double>(cut) / small;
    if (val < best) {
      best = val;
      best_mask = s <= n - s ? m : (all & ~m);
    }
  }
  res.value = best;
  for (int v = 0; v < n; ++v) {
    if (best_mask >> v & 1) res.side.push_back(v);
  }
  return res;
}

double spectral_lower_bound(const Expander& x) {
  const int n = x.n;
  if (n <= 1) return 0.0;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : x.edges) {
    L(u, u) += 1.0;
    L(v, v) += 1.0;
    L(u, v) -= 1.0;
    L(v, u) -= 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L, Eigen::EigenvaluesOnly);
  const double l2 = es.eigenvalues()(1);
  return std::max(0.0, l2 / 2.0);
}

EmbeddingStats embedding_stats(const Embedding& emb) {
  EmbeddingStats s;
  for (const Path& p : emb.edge_paths) {
    for (EdgeId e : p.edges) ++s.load[e];
  }
  for (const auto& es : emb.vertex_edges) {
    for (EdgeId e : es) ++s.load[e];
  }
  for (const auto& [e, c] : s.load) s.eta = std::max(s.eta, c);
  s.delta_prime = emb.x.max_degree();
  return s;
}

Verdict verify_embedding(const Graph& host, const Embedding& emb) {
  Verdict v;
  const int n = emb.x.n;
  if (static_cast<int>(emb.vertex_sets.size()) != n || static_cast<int>(emb.vertex_edges.size()) != n ||
      emb.edge_paths.size() != emb.x.edges.size()) {
    v.add("size", "embedding arrays do not match the expander");
    return v;
  }
  std::map<VertexId, int> owner;
  std::map<EdgeId, int> edge_owner;
  for (int x = 0; x < n; ++x) {
    const auto& vs = emb.vertex_sets[x];
    if (vs.empty()) v.add("subgraph-empty", "C_" + std::to_string(x));
    Graph sub;
    for (VertexId w : vs) {
      if (!host.has_vertex(w)) {
        v.add("subgraph-vertex", "vertex " + std::to_string(w) + " not in host");
        continue;
      }
      sub.add_vertex(w);
      auto [it, fresh] = owner.emplace(w, x);
      if (!fresh) {
        v.add("subgraph-disjoint", "vertex " + std::to_string(w) + " in C_" + std::to_string(it->second) +
                                       " and C_" + std::to_string(x));
      }
    }
    for (EdgeId e : emb.vertex_edges[x]) {
      if (!host.has_edge(e)) {
        v.add("subgraph-edge", "edge " + std::to_string(e) + " not in host");
        continue;
      }
      const Edge& ed = host.edge(e);
      if (!vs.count(ed.u) || !vs.count(ed.v)) {
        v.add("subgraph-edge", "edge " + std::to_string(e) + " leaves C_" + std::to_string(x));
        continue;
      }
      sub.add_edge_with_id(e, ed.u, ed.v, ed.color);
      auto [it, fresh] = edge_owner.emplace(e, x);
      if (!fresh) v.add("subgraph-overlap", "edge " + std::to_string(e));
    }
    if (!vs.empty() && !is_connected(sub)) v.add("subgraph-connected", "C_" + std::to_string(x));
  }
  for (std::size_t i = 0; i < emb.x.edges.size(); ++i) {
    const Path& p = emb.edge_paths[i];
    if (p.vertices.empty() || !is_valid_path(host, p)) {
      v.add("path-valid", "edge " + std::to_string(i));
      continue;
    }
    const auto [a, b] = emb.x.edges[i];
    const auto& ca = emb.vertex_sets[a];
    const auto& cb = emb.vertex_sets[b];
    const bool fwd = ca.count(p.front()) && cb.count(p.back());
    const bool bwd = cb.count(p.front()) && ca.count(p.back());
    if (!fwd && !bwd) v.add("path-endpoints", "edge " + std::to_string(i));
  }
  return v;
}

double tw_product(int kappa, double alpha, int eta, int delta, int delta_prime) {
  if (alpha <= 0.0 || kappa <= 0 || eta <= 0 || delta <= 0 || delta_prime <= 0) return 0.0;
  return kappa * alpha / (static_cast<double>(eta) * delta * delta_prime);
}

}  // namespace twsparse::cmg
