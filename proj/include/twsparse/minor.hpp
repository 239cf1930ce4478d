#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "twsparse/graph.hpp"

namespace twsparse {

struct Violation {
  std::string clause;
  std::string detail;
};

/// Outcome of a structural check: empty violation list means it holds.
struct Verdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& clause) const;
  void add(std::string clause, std::string detail = {});
};

/// Model of a minor H in a host G: each minor vertex maps to a branch set of
/// host vertices, each minor edge to a host edge realizing it.
struct MinorModel {
  std::map<VertexId, std::set<VertexId>> branch;
  std::map<EdgeId, EdgeId> edge_map;

  static MinorModel identity(const Graph& g);
  bool operator==(const MinorModel&) const = default;
};

/// Evidence that H is a topological minor of G: vertices map injectively to
/// host vertices and edges map to internally disjoint host paths.
struct TopoWitness {
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, Path> edge_paths;

  static TopoWitness identity(const Graph& g);
  bool operator==(const TopoWitness&) const = default;
};

enum class EditKind { delete_edge, delete_vertex, contract_edge };

struct Edit {
  EditKind kind;
  int target;  // edge id, or vertex id for delete_vertex
};

/// Result of applying one edit. `update` carries an existing minor model of
/// the old graph forward to the edited graph.
struct EditResult {
  Graph graph;
  Edit edit;
  std::vector<EdgeId> removed_edges;  // includes the contracted edge and merged parallels
  VertexId survivor = -1;             // contraction only
  VertexId absorbed = -1;             // contraction only

  MinorModel update(const MinorModel& m) const;
};

/// Deletes an edge or vertex, or contracts an edge. Contraction keeps the
/// lower endpoint id, drops loops and merges same-color parallel edges into
/// the one with the lower edge id.
EditResult edit(const Graph& g, const Edit& e);

Graph contract_edge(const Graph& g, EdgeId e);
Graph delete_edge(const Graph& g, EdgeId e);

/// Replaces each maximal monochromatic 2-path whose inner vertices avoid
/// `keep` by a single edge of the same color. New edges get fresh ids.
/// A 2-path whose replacement would be a loop or a same-color parallel edge
/// keeps enough inner vertices to stay simple, and pure cycles shrink to
/// triangles. The witness maps every edge of the result to a path in `g`.
struct Suppression {
  Graph graph;
  TopoWitness witness;
};
Suppression suppress_degree2(const Graph& g, const std::set<VertexId>& keep);

Verdict verify_minor_model(const Graph& host, const Graph& minor, const MinorModel& m,
                           const std::set<VertexId>& respecting = {});

Verdict verify_topo_witness(const Graph& host, const Graph& minor, const TopoWitness& w);

}  // namespace twsparse
