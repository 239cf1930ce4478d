#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twsparse/graph.hpp"
#include "twsparse/minor.hpp"
#include "twsparse/routing.hpp"

namespace twsparse::two_pair {

/// Padded host with degree-1 terminal copies.
///
/// `graph` contains the original graph, k1 - k2 dummy edges (a_i, b_i) whose
/// endpoints join S2 and T2, and one pendant copy per terminal of every set.
struct Instance {
  Graph original;
  Graph graph;
  int k1 = 0;
  int k2 = 0;
  std::vector<VertexId> S1, T1, S2, T2;          // original sets, S2/T2 padded
  std::vector<VertexId> S1c, T1c, S2c, T2c;      // pendant copies, same order
  std::map<VertexId, VertexId> attached_to;      // copy -> vertex it hangs on
  std::set<VertexId> dummy_vertices;
  std::set<EdgeId> dummy_edges;

  std::set<VertexId> terminals() const;
};

/// Throws ArgumentError when k2 > k1 or sizes differ, and InfeasibleError
/// when either pair is not routable in g.
Instance pad_and_attach(const Graph& g, const std::vector<VertexId>& S1,
                        const std::vector<VertexId>& T1, const std::vector<VertexId>& S2,
                        const std::vector<VertexId>& T2);

struct MinimalityEntry {
  EdgeId edge = -1;
  bool delete_breaks_red = false;
  bool delete_breaks_blue = false;
  bool contract_skipped = false;  // edge touches a terminal
  bool contract_breaks_red = false;
  bool contract_breaks_blue = false;

  bool holds() const {
    return (delete_breaks_red || delete_breaks_blue) &&
           (contract_skipped || contract_breaks_red || contract_breaks_blue);
  }
};

struct GoodMinor {
  Graph minor;
  MinorModel model;  // into Instance::graph
  PathSet red;       // routes (S1c, T1c) in `minor`
  PathSet blue;      // routes (S2c, T2c) in `minor`
  std::vector<Edit> edits;
  std::vector<MinimalityEntry> certificate;
};

/// Shrinks the padded host to a minor in which removing or contracting any
/// edge breaks one of the two routings. Deletions are tried before
/// contractions, each in ascending edge id. Isolated non-terminal vertices
/// are dropped at the end.
GoodMinor minimal_good_minor(const Instance& inst);

/// Re-tests every edge of `m.minor` from scratch.
std::vector<MinimalityEntry> check_minimality(const Instance& inst, const Graph& minor);

/// Upper bound on |V(H)| for a minimal minor with k paths per pair.
long long minor_size_bound(int k);
/// Upper bound on tau of the lifted union.
long long lifted_tau_bound(int k);

/// Structural facts every minimal minor must satisfy: each edge on exactly
/// one coloured path, each non-terminal on one red and one blue path (or the
/// only inner vertex of a single path), and both path systems unique.
Verdict verify_good_minor(const Instance& inst, const GoodMinor& m);

struct Chain {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<Color> colors;
};

struct ChainSystem {
  std::vector<Chain> forward;  // red along S1 -> T1
  std::vector<Chain> reverse;  // red along T1 -> S1
  std::map<VertexId, int> label;
  std::map<VertexId, int> reverse_label;
};

/// One chain per source of S1c and S2c (in that order), grown greedily by
/// alternating colours; a vertex on a single path continues in its colour.
/// Throws InvariantError if some vertex has two outgoing edges of one colour.
ChainSystem build_chains(const GoodMinor& m);

/// A directed closed walk in the coloured digraph, reported as a simple cycle.
struct ColoredCycle {
  std::vector<VertexId> vertices;  // v0 ... v_{r-1}, edge i joins v_i to v_{i+1 mod r}
  std::vector<EdgeId> edges;
  std::vector<Color> colors;
};

/// Directed coloured arcs: every edge of a red path points along the path,
/// and likewise for blue.
struct ColoredArc {
  VertexId from;
  VertexId to;
  EdgeId edge;
  Color color;
};
std::vector<ColoredArc> oriented_arcs(const PathSet& red, const PathSet& blue);

/// Finds a simple directed cycle using at least one `single` edge in which
/// no two `single` edges are consecutive (a blue cycle when single = red).
std::optional<ColoredCycle> find_alternating_cycle(const std::vector<ColoredArc>& arcs,
                                                   Color single);

/// Checks (a) chains are simple, (b) no red or blue cycle, (c) order on
/// chains agrees with order on paths, (d) distinct quadruples, and that the
/// labelings cover every vertex and order shared vertices consistently.
Verdict verify_chain_properties(const GoodMinor& m, const ChainSystem& cs);

struct Lifted {
  PathSet red;   // routes the original (S1, T1)
  PathSet blue;  // routes the original (S2, T2), dummy paths removed
};

Lifted lift_to_original(const Instance& inst, const GoodMinor& m);

/// Graph formed by all vertices and edges of both path sets in `host`.
Graph path_union(const Graph& host, const PathSet& a, const PathSet& b);

struct TwoPairResult {
  PathSet red;
  PathSet blue;
  Instance instance;
  GoodMinor minor;
  bool swapped = false;  // pairs were exchanged so that k1 >= k2
};

/// Routes (S1, T1) and (S2, T2) so that the union has few vertices of
/// degree at least three. The larger pair is routed as red internally; the
/// returned `red` always routes (S1, T1).
TwoPairResult route_two_pairs(const Graph& g, const std::vector<VertexId>& S1,
                              const std::vector<VertexId>& T1, const std::vector<VertexId>& S2,
                              const std::vector<VertexId>& T2);

}  // namespace twsparse::two_pair
