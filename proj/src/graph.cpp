#include "twsparse/graph.hpp"

#include <algorithm>
#include <deque>

namespace twsparse {

std::string_view to_string(Color c) {
  switch (c) {
    case Color::none:
      return "none";
    case Color::red:
      return "red";
    case Color::blue:
      return "blue";
    case Color::red_blue:
      return "red-blue";
  }
  return "none";
}

Color color_from_string(std::string_view s) {
  if (s == "none") return Color::none;
  if (s == "red") return Color::red;
  if (s == "blue") return Color::blue;
  if (s == "red-blue" || s == "red_blue") return Color::red_blue;
  throw ArgumentError("unknown color '" + std::string(s) + "'");
}

void Graph::add_vertex(VertexId v) {
  if (v < 0) throw ArgumentError("vertex ids must be non-negative");
  adj_.try_emplace(v);
}

EdgeId Graph::add_edge(VertexId u, VertexId v, Color c) {
  return add_edge_with_id(next_edge_id_, u, v, c);
}

EdgeId Graph::add_edge_with_id(EdgeId id, VertexId u, VertexId v, Color c) {
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  if (id < 0) throw ArgumentError("edge ids must be non-negative");
  if (edges_.count(id)) throw ArgumentError("duplicate edge id " + std::to_string(id));
  if (index_.count(key(u, v, c))) {
    throw ArgumentError("parallel edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " with color " + std::string(to_string(c)));
  }
  add_vertex(u);
  add_vertex(v);
  edges_.emplace(id, Edge{id, u, v, c});
  index_.emplace(key(u, v, c), id);
  for (VertexId w : {u, v}) {
    auto& inc = adj_[w];
    inc.insert(std::upper_bound(inc.begin(), inc.end(), id), id);
  }
  next_edge_id_ = std::max(next_edge_id_, id + 1);
  return id;
}

const Edge& Graph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw NotFoundError("edge " + std::to_string(e) + " not found");
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v, Color c) const {
  auto it = index_.find(key(u, v, c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_any_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u)) return std::nullopt;
  for (EdgeId e : incident(u)) {
    if (edges_.at(e).other(u) == v) return e;
  }
  return std::nullopt;
}

void Graph::remove_edge(EdgeId e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw NotFoundError("edge " + std::to_string(e) + " not found");
  const Edge ed = it->second;
  for (VertexId w : {ed.u, ed.v}) {
    auto& inc = adj_[w];
    inc.erase(std::lower_bound(inc.begin(), inc.end(), e));
  }
  index_.erase(key(ed.u, ed.v, ed.color));
  edges_.erase(it);
}

void Graph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw NotFoundError("vertex " + std::to_string(v) + " not found");
  const std::vector<EdgeId> inc = it->second;
  for (EdgeId e : inc) remove_edge(e);
  adj_.erase(v);
}

void Graph::set_color(EdgeId e, Color c) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw NotFoundError("edge " + std::to_string(e) + " not found");
  Edge& ed = it->second;
  if (ed.color == c) return;
  if (index_.count(key(ed.u, ed.v, c))) {
    throw ArgumentError("recoloring edge " + std::to_string(e) + " creates a parallel edge");
  }
  index_.erase(key(ed.u, ed.v, ed.color));
  ed.color = c;
  index_.emplace(key(ed.u, ed.v, c), e);
}

std::span<const EdgeId> Graph::incident(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw NotFoundError("vertex " + std::to_string(v) + " not found");
  return it->second;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(edges_.at(e).other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, inc] : adj_) out.push_back(v);
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& [v, inc] : adj_) d = std::max(d, inc.size());
  return d;
}

Graph Graph::induced_subgraph(const std::set<VertexId>& keep) const {
  Graph out;
  for (VertexId v : keep) {
    if (has_vertex(v)) out.add_vertex(v);
  }
  for (const auto& [id, e] : edges_) {
    if (keep.count(e.u) && keep.count(e.v)) out.add_edge_with_id(id, e.u, e.v, e.color);
  }
  out.next_edge_id_ = std::max(out.next_edge_id_, next_edge_id_);
  return out;
}

Graph Graph::edge_subgraph(const std::set<EdgeId>& keep) const {
  Graph out;
  for (EdgeId id : keep) {
    const Edge& e = edge(id);
    out.add_edge_with_id(id, e.u, e.v, e.color);
  }
  out.next_edge_id_ = std::max(out.next_edge_id_, next_edge_id_);
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (adj_.size() != o.adj_.size() || edges_.size() != o.edges_.size()) return false;
  for (const auto& [v, inc] : adj_) {
    if (!o.has_vertex(v)) return false;
  }
  for (const auto& [id, e] : edges_) {
    auto it = o.edges_.find(id);
    if (it == o.edges_.end()) return false;
    const Edge& f = it->second;
    if (f.color != e.color || std::minmax(f.u, f.v) != std::minmax(e.u, e.v)) return false;
  }
  return true;
}

std::size_t tau(const Graph& g) {
  std::size_t n = 0;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) >= 3) ++n;
  }
  return n;
}

std::size_t boundary_size(const Graph& g, const std::set<VertexId>& side) {
  std::size_t n = 0;
  for (const auto& [id, e] : g.edges()) {
    if ((side.count(e.u) != 0) != (side.count(e.v) != 0)) ++n;
  }
  return n;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size()) return false;
  std::set<VertexId> seen;
  for (VertexId v : p.vertices) {
    if (!g.has_vertex(v) || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return false;
    const Edge& e = g.edge(p.edges[i]);
    if (std::minmax(e.u, e.v) != std::minmax(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

Graph make_path_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle_graph(int n) {
  Graph g = make_path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph make_star_graph(int leaves) {
  Graph g;
  g.add_vertex(0);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph make_grid_graph(int rows, int cols) {
  Graph g;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g.add_vertex(r * cols + c);
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  }
  return g;
}

Graph make_petersen_graph() {
  Graph g;
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace twsparse
