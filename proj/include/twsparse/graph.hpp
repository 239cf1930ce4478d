#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "twsparse/errors.hpp"

namespace twsparse {

enum class Color : unsigned char { none, red, blue, red_blue };

std::string_view to_string(Color c);
Color color_from_string(std::string_view s);

struct Edge {
  EdgeId id = -1;
  VertexId u = -1;
  VertexId v = -1;
  Color color = Color::none;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return u == w || v == w; }
};

/// A vertex-simple walk given by its vertex sequence and the edges between
/// consecutive vertices. A single vertex with no edges is a zero-length path.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// Undirected multigraph with stable vertex and edge ids.
///
/// Parallel edges are allowed only when their colors differ, and self-loops
/// are rejected. Incident edge lists are kept sorted by edge id so every
/// traversal that walks them is reproducible.
class Graph {
 public:
  Graph() = default;

  void add_vertex(VertexId v);
  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

  /// Adds an edge with the next free id. Throws ArgumentError on a loop or a
  /// same-color parallel edge.
  EdgeId add_edge(VertexId u, VertexId v, Color c = Color::none);
  EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v, Color c = Color::none);

  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v, Color c) const;
  /// Any edge between u and v regardless of color, lowest id first.
  std::optional<EdgeId> find_any_edge(VertexId u, VertexId v) const;

  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);
  void set_color(EdgeId e, Color c);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  std::span<const EdgeId> incident(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Sorted vertex ids.
  std::vector<VertexId> vertices() const;
  const std::map<EdgeId, Edge>& edges() const { return edges_; }

  VertexId max_vertex_id() const { return adj_.empty() ? -1 : adj_.rbegin()->first; }
  EdgeId next_edge_id() const { return next_edge_id_; }
  std::size_t max_degree() const;

  Graph induced_subgraph(const std::set<VertexId>& keep) const;
  /// Subgraph on the given edges and their endpoints.
  Graph edge_subgraph(const std::set<EdgeId>& keep) const;

  bool operator==(const Graph& o) const;

 private:
  using Key = std::tuple<VertexId, VertexId, Color>;
  static Key key(VertexId u, VertexId v, Color c) {
    return u < v ? Key{u, v, c} : Key{v, u, c};
  }

  std::map<VertexId, std::vector<EdgeId>> adj_;
  std::map<EdgeId, Edge> edges_;
  std::map<Key, EdgeId> index_;
  EdgeId next_edge_id_ = 0;
};

/// Number of vertices of degree at least three.
std::size_t tau(const Graph& g);

/// Edges with exactly one endpoint in `side`.
std::size_t boundary_size(const Graph& g, const std::set<VertexId>& side);

bool is_connected(const Graph& g);
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Checks that `p` is a vertex-simple path of `g` whose listed edges join
/// consecutive vertices.
bool is_valid_path(const Graph& g, const Path& p);

/// Builders for common graphs. Vertex ids start at 0.
Graph make_path_graph(int n);
Graph make_cycle_graph(int n);
Graph make_complete_graph(int n);
Graph make_star_graph(int leaves);
/// rows x cols grid, vertex id = row * cols + col.
Graph make_grid_graph(int rows, int cols);
Graph make_petersen_graph();

}  // namespace twsparse
