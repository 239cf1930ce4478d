#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "twsparse/graph.hpp"
#include "twsparse/minor.hpp"
#include "twsparse/rng.hpp"

namespace twsparse::cmg {

/// Multigraph on vertices 0..n-1, kept as an edge list because the union of
/// matchings may repeat an edge.
struct Expander {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  int max_degree() const;
  bool operator==(const Expander&) const = default;
};

struct Partition {
  std::vector<int> Y;  // always holds vertex 0
  std::vector<int> Z;
  bool operator==(const Partition&) const = default;
};

using Matching = std::vector<std::pair<int, int>>;  // (y, z) pairs

struct Round {
  Partition partition;
  Matching matching;
  bool operator==(const Round&) const = default;
};

/// Game state. `flow` is the n x n row-major matrix of the lazy walk
/// induced by the matchings so far; row v is the distribution that started
/// at v.
struct ExpanderState {
  explicit ExpanderState(int n);

  int n;
  Expander x;
  int round = 0;
  std::vector<double> flow;
  std::optional<Partition> pending;
  std::vector<Round> transcript;
};

/// Rounds used when none are configured: ceil(10 * log2(N)^2).
int default_rounds(int n);

/// Projects every flow row onto a random Gaussian direction and splits at
/// the median. Stores the partition as pending. Throws ArgumentError for
/// odd n.
Partition cut_player_partition(ExpanderState& st, Rng& rng);

/// Adds a perfect matching across the pending partition and averages the
/// flow rows of matched vertices. Throws ProtocolError otherwise.
void play_round(ExpanderState& st, const Matching& m);

using MatchingOracle = std::function<Matching(const Partition&)>;

struct GameResult {
  Expander x;
  std::vector<Round> transcript;
};

GameResult run_game(int n, int rounds, const MatchingOracle& oracle, Rng& rng);

/// Rebuilds X from a transcript, re-checking every round.
Expander replay(int n, const std::vector<Round>& transcript);

struct ExpansionResult {
  double value = 0.0;
  bool exact = true;     // false: spectral lower bound only
  std::vector<int> side;  // minimizing side when exact
};

/// min over nonempty S with |S| <= n/2 of |E(S, V-S)| / |S|. Enumerates all
/// cuts when 2^(n-1) <= budget, else returns lambda_2 / 2 of the Laplacian.
ExpansionResult expansion(const Expander& x, std::uint64_t budget = 1u << 20);

/// Half the second-smallest Laplacian eigenvalue.
double spectral_lower_bound(const Expander& x);

/// Expander vertex v is mapped to a connected host subgraph (vertex_sets[v],
/// vertex_edges[v]); expander edge i to host path edge_paths[i].
struct Embedding {
  Expander x;
  std::vector<std::set<VertexId>> vertex_sets;
  std::vector<std::set<EdgeId>> vertex_edges;
  std::vector<Path> edge_paths;
};

struct EmbeddingStats {
  int eta = 0;  // max over host edges of paths plus subgraphs through it
  int delta_prime = 0;
  std::map<EdgeId, int> load;
};

EmbeddingStats embedding_stats(const Embedding& emb);

Verdict verify_embedding(const Graph& host, const Embedding& emb);

/// Constant-free treewidth lower-bound product kappa * alpha / (eta * delta * delta').
double tw_product(int kappa, double alpha, int eta, int delta, int delta_prime);

}  // namespace twsparse::cmg
