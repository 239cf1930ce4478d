#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twsparse/graph.hpp"
#include "twsparse/minor.hpp"

namespace twsparse {

enum class PathRole { none, red, blue };

std::string_view to_string(PathRole r);

/// Vertex-disjoint directed paths, one per source. paths[i] starts at a
/// vertex of `sources` and ends at a vertex of `sinks`; paths are sorted by
/// their first vertex.
struct PathSet {
  std::vector<Path> paths;
  PathRole role = PathRole::none;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;

  bool operator==(const PathSet&) const = default;
};

struct RouteResult {
  std::optional<PathSet> routing;
  std::vector<VertexId> cut;  // set when routing is empty; |cut| < |S|

  bool ok() const { return routing.has_value(); }
};

/// Finds |S| vertex-disjoint S->T paths by max flow on the split graph.
/// Vertices in both S and T become zero-length paths. When no routing
/// exists, `cut` is a vertex set of size < |S| separating S from T.
/// Throws ArgumentError if |S| != |T| or a vertex is missing.
RouteResult route_node_disjoint(const Graph& g, const std::vector<VertexId>& S,
                                const std::vector<VertexId>& T, PathRole role = PathRole::none);

/// Same as route_node_disjoint but throws InfeasibleError instead.
PathSet route_or_throw(const Graph& g, const std::vector<VertexId>& S,
                       const std::vector<VertexId>& T, PathRole role = PathRole::none);

Verdict verify_path_set(const Graph& g, const PathSet& ps);

struct LinkVerdict {
  bool holds = true;
  bool exact = true;  // false: budget exceeded, only sampled pairs were tried
  std::uint64_t tested = 0;
  std::vector<VertexId> fail_from;  // first failing pair, if any
  std::vector<VertexId> fail_to;
  std::vector<VertexId> cut;
};

/// Every equal-sized pair A' of A and B' of B is routable.
LinkVerdict check_linked(const Graph& g, const std::vector<VertexId>& A,
                         const std::vector<VertexId>& B, std::uint64_t budget = 1u << 20,
                         std::uint64_t seed = 0);

/// Every two equal-sized subsets of T (possibly overlapping) are routable.
LinkVerdict check_node_well_linked(const Graph& g, const std::vector<VertexId>& T,
                                   std::uint64_t budget = 1u << 20, std::uint64_t seed = 0);

enum class CutCertificate { enumeration, flow, heuristic, stoer_wagner };

std::string_view to_string(CutCertificate c);

struct CutReport {
  std::set<VertexId> side;
  std::size_t crossing = 0;
  double objective = 0.0;
  CutCertificate certificate = CutCertificate::enumeration;
};

struct WellLinkedVerdict {
  bool holds = true;
  bool exact = true;  // false: the worst ratio is only an upper bound
  std::optional<CutReport> worst;
};

/// Minimum over bipartitions (X, V-X) of |E(X, V-X)| / min(|X n T|, |T - X|),
/// compared against alpha. Exact by enumeration up to `exact_threshold`
/// vertices, or by min cuts over all terminal splits while those number at
/// most `budget`. Ties prefer the most balanced side.
WellLinkedVerdict check_alpha_well_linked(const Graph& g, const std::vector<VertexId>& T,
                                          double alpha, std::uint64_t budget = 1u << 20,
                                          int exact_threshold = 20, std::uint64_t seed = 0);

struct WeightedEdge {
  int u;
  int v;
  double w;
};

/// Stoer-Wagner on vertices 0..n-1. Parallel edges add up.
CutReport global_min_cut(int n, const std::vector<WeightedEdge>& edges);
CutReport global_min_cut(const Graph& g);

/// Minimum s-t edge cut separating the sets X and Y (unit capacities).
CutReport min_edge_cut(const Graph& g, const std::set<VertexId>& X, const std::set<VertexId>& Y);

/// Exact treewidth for graphs with at most 32 vertices.
int exact_treewidth(const Graph& g);

}  // namespace twsparse
