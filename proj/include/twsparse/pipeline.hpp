#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "twsparse/cut_matching.hpp"
#include "twsparse/graph.hpp"
#include "twsparse/minor.hpp"
#include "twsparse/path_of_sets.hpp"
#include "twsparse/rng.hpp"
#include "twsparse/routing.hpp"

namespace twsparse::pipeline {

struct Config {
  int h = 2;
  int r = 2;
  int rstar = 2;  // clusters (game rounds) per expander
  int N = 1;      // number of expanders
  int theta = 12;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1u << 20;

  /// Throws ArgumentError on odd h, r != N * rstar or theta < 1.
  void check() const;
};

/// Formula values that the desk-scale configuration replaces.
struct NominalValues {
  long long N = 0;        // ceil(3072 log2(10 h^4 rstar))
  double theta = 0.0;     // 200 N^4 for the configured N
  int rstar = 0;          // ceil(10 log2(h)^2)
};
NominalValues nominal_values(const Config& c);

/// One cluster after routing. Paths and `J` use host ids; `H` is `J` with
/// internal degree-2 vertices suppressed (fresh edge ids) and `witness`
/// maps it back to the host.
struct ClusterRouting {
  int index = 0;
  std::vector<VertexId> A, B, A1, A2;  // A1 / A2 are the two halves of A
  PathSet red;
  PathSet blue;
  Graph J;
  Graph H;
  TopoWitness witness;
  cmg::Matching matching;
};

/// Routes (A, B) and the split (A1, A2) of A induced by the partition
/// through f inside G[S], keeps an edge-minimal union of both routings and
/// suppresses it. `f` maps each vertex of A to an expander vertex.
ClusterRouting cluster_iteration(const Graph& g, const std::set<VertexId>& S,
                                 const std::vector<VertexId>& A, const std::vector<VertexId>& B,
                                 const cmg::Partition& p, const std::map<VertexId, int>& f);

/// Edges of c.H whose deletion keeps both routings feasible. Empty when the
/// reduced cluster graph is minimal.
std::vector<EdgeId> cluster_minimality_violations(const ClusterRouting& c);

struct State {
  std::vector<VertexId> A;           // A_1; horizontal path i starts at A[i]
  Graph H;                           // vertices are host ids
  TopoWitness witness;               // H into the host
  std::map<VertexId, int> cluster_of;
  std::vector<Path> horizontal;      // in H
  std::vector<ClusterRouting> clusters;
};

struct ExpanderRun {
  int first_cluster = 0;
  cmg::Embedding embedding;  // into State::H
  std::vector<cmg::Round> transcript;
};

struct Assembly {
  State state;
  std::vector<ExpanderRun> expanders;
};

/// Plays N games of rstar rounds each, one cluster per round in order, and
/// glues the reduced cluster graphs with the connectors into H.
Assembly assemble(const pos::System& s, int N, int rstar, Rng& rng);

/// Single expander over all clusters; H has maximum degree 4.
Assembly embed_expander_degree4(const pos::System& s, Rng& rng);

struct Sampling {
  Graph Hstar;
  std::vector<EdgeId> deleted;                     // ascending
  std::map<EdgeId, std::vector<VertexId>> chosen_by;
};

/// Every vertex with two blue edges picks one uniformly; chosen edges are
/// deleted. Throws InvariantError if a degree-4 vertex does not have
/// exactly two blue edges or the result has degree above 3.
Sampling sample_blue_edges(const Graph& H, Rng& rng);

/// segments[i] partitions horizontal[i].vertices into contiguous runs.
using Segmentation = std::vector<std::vector<std::vector<VertexId>>>;

/// A run is heavy when it holds at least theta vertices of one cluster.
Segmentation segment_red_paths(const std::vector<Path>& horizontal,
                               const std::map<VertexId, int>& cluster_of, int theta);

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<EdgeId> origin;  // H edge behind each F edge
};

struct Contracted {
  std::map<VertexId, int> node_of;  // H vertex -> supernode
  Multigraph F;
  Multigraph Fstar;
  std::vector<int> U;  // supernode of A[i]
};

Contracted contract_segments(const State& st, const Segmentation& seg, const Graph& Hstar);

/// Host vertices behind a set of supernodes.
std::set<VertexId> lift(const Contracted& c, const std::set<int>& side);

std::size_t out_degree(const Multigraph& m, const std::set<int>& side);

struct MinCutVerdict {
  long long value = 0;
  long long N = 0;
  bool holds = false;
  std::set<int> side;
};
MinCutVerdict verify_min_cut_F(const Multigraph& F, long long N);

struct PreservationReport {
  double worst_ratio = 1.0;
  std::set<int> worst_side;
  long long cuts_tested = 0;
  long long violations = 0;
  bool exhaustive = true;
};
/// Ratio out_{F*}(S) / out_F(S) over all cuts when F has at most 20 vertices,
/// else over singletons and `samples` random sides.
PreservationReport verify_sampling_preservation(const Multigraph& F, const Multigraph& Fstar,
                                                double factor = 32.0, int samples = 2000,
                                                std::uint64_t seed = 0);

struct WellLinkedness {
  double alpha = 0.0;  // min over terminal splits of cut / smaller side
  bool exact = true;
};
WellLinkedness measure_well_linkedness(const Multigraph& m, const std::vector<int>& terminals,
                                       std::uint64_t budget = 1u << 20);
Multigraph to_multigraph(const Graph& g, std::map<VertexId, int>* index = nullptr);

struct Run {
  Config config;
  int degree = 3;
  State state;
  std::vector<ExpanderRun> expanders;
  Sampling sampling;
  Segmentation segments;
};

/// Full construction from a seed: games, gluing, then sampling in vertex-id
/// order (degree 3 only) and segmentation.
Run build_degree3(const pos::System& s, const Config& c);
Run build_degree4(const pos::System& s, const Config& c);

}  // namespace twsparse::pipeline
