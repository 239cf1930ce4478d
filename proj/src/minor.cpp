#include "twsparse/minor.hpp"

#include <algorithm>
#include <deque>

namespace twsparse {

bool Verdict::has(const std::string& clause) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.clause == clause; });
}

void Verdict::add(std::string clause, std::string detail) {
  violations.push_back({std::move(clause), std::move(detail)});
}

MinorModel MinorModel::identity(const Graph& g) {
  MinorModel m;
  for (VertexId v : g.vertices()) m.branch[v] = {v};
  for (const auto& [id, e] : g.edges()) m.edge_map[id] = id;
  return m;
}

TopoWitness TopoWitness::identity(const Graph& g) {
  TopoWitness w;
  for (VertexId v : g.vertices()) w.vertex_map[v] = v;
  for (const auto& [id, e] : g.edges()) w.edge_paths[id] = Path{{e.u, e.v}, {id}};
  return w;
}

MinorModel EditResult::update(const MinorModel& m) const {
  MinorModel out = m;
  for (EdgeId e : removed_edges) out.edge_map.erase(e);
  switch (edit.kind) {
    case EditKind::delete_edge:
      break;
    case EditKind::delete_vertex:
      out.branch.erase(edit.target);
      break;
    case EditKind::contract_edge: {
      auto absorbed_set = out.branch.at(absorbed);
      out.branch.at(survivor).insert(absorbed_set.begin(), absorbed_set.end());
      out.branch.erase(absorbed);
      break;
    }
  }
  return out;
}

EditResult edit(const Graph& g, const Edit& e) {
  EditResult r{g, e, {}, -1, -1};
  switch (e.kind) {
    case EditKind::delete_edge:
      if (!g.has_edge(e.target)) throw NotFoundError("edge " + std::to_string(e.target) + " not found");
      r.graph.remove_edge(e.target);
      r.removed_edges.push_back(e.target);
      return r;
    case EditKind::delete_vertex: {
      if (!g.has_vertex(e.target)) {
        throw NotFoundError("vertex " + std::to_string(e.target) + " not found");
      }
      auto inc = g.incident(e.target);
      r.removed_edges.assign(inc.begin(), inc.end());
      r.graph.remove_vertex(e.target);
      return r;
    }
    case EditKind::contract_edge:
      break;
  }

  const Edge ce = g.edge(e.target);
  const VertexId s = std::min(ce.u, ce.v);
  const VertexId a = std::max(ce.u, ce.v);
  r.survivor = s;
  r.absorbed = a;
  Graph& out = r.graph;
  std::vector<Edge> moved;
  for (EdgeId f : g.incident(a)) moved.push_back(g.edge(f));
  out.remove_vertex(a);
  for (const Edge& f : moved) {
    const VertexId w = f.other(a);
    if (w == s) {  // the contracted edge or a parallel of another color
      r.removed_edges.push_back(f.id);
      continue;
    }
    if (auto existing = out.find_edge(s, w, f.color)) {
      if (*existing < f.id) {
        r.removed_edges.push_back(f.id);
        continue;
      }
      out.remove_edge(*existing);
      r.removed_edges.push_back(*existing);
    }
    out.add_edge_with_id(f.id, s, w, f.color);
  }
  std::sort(r.removed_edges.begin(), r.removed_edges.end());
  return r;
}

Graph contract_edge(const Graph& g, EdgeId e) {
  return edit(g, {EditKind::contract_edge, e}).graph;
}

Graph delete_edge(const Graph& g, EdgeId e) { return edit(g, {EditKind::delete_edge, e}).graph; }

namespace {

Path sub_path(const Path& p, std::size_t from, std::size_t to) {
  Path out;
  out.vertices.assign(p.vertices.begin() + from, p.vertices.begin() + to + 1);
  out.edges.assign(p.edges.begin() + from, p.edges.begin() + to);
  return out;
}

}  // namespace

Suppression suppress_degree2(const Graph& g, const std::set<VertexId>& keep) {
  auto is_anchor = [&](VertexId v) {
    if (g.degree(v) != 2 || keep.count(v)) return true;
    auto inc = g.incident(v);
    return g.edge(inc[0]).color != g.edge(inc[1]).color;
  };

  Suppression out;
  Graph& h = out.graph;
  TopoWitness& w = out.witness;
  EdgeId fresh = g.next_edge_id();

  auto keep_vertex = [&](VertexId v) {
    h.add_vertex(v);
    w.vertex_map[v] = v;
  };
  auto keep_edge = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    h.add_edge_with_id(id, e.u, e.v, e.color);
    w.edge_paths[id] = Path{{e.u, e.v}, {id}};
  };
  auto add_path_edge = [&](const Path& p, Color c) {
    if (p.edges.size() == 1) {
      keep_edge(p.edges[0]);
      return;
    }
    const EdgeId id = fresh++;
    h.add_edge_with_id(id, p.front(), p.back(), c);
    w.edge_paths[id] = p;
  };

  std::set<EdgeId> visited;
  std::vector<Path> long_paths;
  for (VertexId a : g.vertices()) {
    if (!is_anchor(a)) continue;
    keep_vertex(a);
    for (EdgeId start : g.incident(a)) {
      if (visited.count(start)) continue;
      Path p{{a}, {}};
      VertexId cur = a;
      EdgeId e = start;
      while (true) {
        visited.insert(e);
        p.edges.push_back(e);
        cur = g.edge(e).other(cur);
        p.vertices.push_back(cur);
        if (is_anchor(cur)) break;
        auto inc = g.incident(cur);
        e = inc[0] == e ? inc[1] : inc[0];
      }
      if (p.edges.size() == 1) {
        continue;  // plain edges are added once all anchors exist
      }
      long_paths.push_back(std::move(p));
    }
  }
  for (const auto& [id, e] : g.edges()) {
    if (is_anchor(e.u) && is_anchor(e.v)) keep_edge(id);
  }
  for (const Path& p : long_paths) {
    const Color c = g.edge(p.edges[0]).color;
    const std::size_t last = p.vertices.size() - 1;
    if (p.front() == p.back()) {
      // Hanging cycle: keep the two inner vertices next to the anchor.
      keep_vertex(p.vertices[1]);
      keep_vertex(p.vertices[last - 1]);
      keep_edge(p.edges[0]);
      add_path_edge(sub_path(p, 1, last - 1), c);
      keep_edge(p.edges[last - 1]);
    } else if (h.find_edge(p.front(), p.back(), c)) {
      keep_vertex(p.vertices[1]);
      keep_edge(p.edges[0]);
      add_path_edge(sub_path(p, 1, last), c);
    } else {
      add_path_edge(p, c);
    }
  }

  // Components made only of degree-2 vertices are monochromatic cycles.
  for (VertexId v0 : g.vertices()) {
    if (is_anchor(v0) || visited.count(g.incident(v0)[0])) continue;
    Path cyc{{v0}, {}};
    VertexId cur = v0;
    EdgeId e = g.incident(v0)[0];
    while (true) {
      visited.insert(e);
      cyc.edges.push_back(e);
      cur = g.edge(e).other(cur);
      cyc.vertices.push_back(cur);
      if (cur == v0) break;
      auto inc = g.incident(cur);
      e = inc[0] == e ? inc[1] : inc[0];
    }
    const Color c = g.edge(cyc.edges[0]).color;
    const std::size_t len = cyc.edges.size();
    keep_vertex(v0);
    keep_vertex(cyc.vertices[1]);
    keep_vertex(cyc.vertices[len - 1]);
    keep_edge(cyc.edges[0]);
    add_path_edge(sub_path(cyc, 1, len - 1), c);
    keep_edge(cyc.edges[len - 1]);
  }
  return out;
}

Verdict verify_minor_model(const Graph& host, const Graph& minor, const MinorModel& m,
                           const std::set<VertexId>& respecting) {
  Verdict verdict;
  std::map<VertexId, VertexId> owner;
  for (VertexId v : minor.vertices()) {
    auto it = m.branch.find(v);
    if (it == m.branch.end() || it->second.empty()) {
      verdict.add("nonempty", "minor vertex " + std::to_string(v) + " has no branch set");
      continue;
    }
    bool present = true;
    for (VertexId x : it->second) {
      if (!host.has_vertex(x)) {
        verdict.add("host-vertex", "branch vertex " + std::to_string(x) + " missing from host");
        present = false;
        continue;
      }
      auto [pos, fresh] = owner.emplace(x, v);
      if (!fresh) {
        verdict.add("disjointness", "host vertex " + std::to_string(x) + " in branch sets of " +
                                        std::to_string(pos->second) + " and " + std::to_string(v));
      }
    }
    if (present && !is_connected(host.induced_subgraph(it->second))) {
      verdict.add("connectivity", "branch set of " + std::to_string(v) + " is disconnected");
    }
  }
  for (const auto& [v, set] : m.branch) {
    if (!minor.has_vertex(v)) verdict.add("domain", "branch set for unknown vertex " + std::to_string(v));
  }
  for (const auto& [id, e] : minor.edges()) {
    auto it = m.edge_map.find(id);
    if (it == m.edge_map.end() || !host.has_edge(it->second)) {
      verdict.add("edge-realization", "minor edge " + std::to_string(id) + " has no host edge");
      continue;
    }
    const Edge& he = host.edge(it->second);
    auto in = [&](VertexId hv, VertexId mv) {
      auto b = m.branch.find(mv);
      return b != m.branch.end() && b->second.count(hv) != 0;
    };
    const bool ok = (in(he.u, e.u) && in(he.v, e.v)) || (in(he.u, e.v) && in(he.v, e.u));
    if (!ok) {
      verdict.add("edge-realization", "host edge " + std::to_string(he.id) +
                                          " does not join the branch sets of minor edge " +
                                          std::to_string(id));
    }
  }
  for (VertexId x : respecting) {
    auto it = m.branch.find(x);
    if (!minor.has_vertex(x) || it == m.branch.end() || it->second != std::set<VertexId>{x}) {
      verdict.add("respecting", "vertex " + std::to_string(x) + " is not a singleton branch set");
    }
  }
  return verdict;
}

Verdict verify_topo_witness(const Graph& host, const Graph& minor, const TopoWitness& w) {
  Verdict verdict;
  std::map<VertexId, VertexId> image_of;
  for (VertexId v : minor.vertices()) {
    auto it = w.vertex_map.find(v);
    if (it == w.vertex_map.end() || !host.has_vertex(it->second)) {
      verdict.add("vertex-map", "minor vertex " + std::to_string(v) + " has no host image");
      continue;
    }
    auto [pos, fresh] = image_of.emplace(it->second, v);
    if (!fresh) {
      verdict.add("injectivity", "host vertex " + std::to_string(it->second) + " is the image of " +
                                     std::to_string(pos->second) + " and " + std::to_string(v));
    }
  }
  std::map<VertexId, EdgeId> inner_owner;
  std::map<EdgeId, EdgeId> host_edge_owner;
  for (const auto& [id, e] : minor.edges()) {
    auto it = w.edge_paths.find(id);
    if (it == w.edge_paths.end()) {
      verdict.add("path-validity", "minor edge " + std::to_string(id) + " has no host path");
      continue;
    }
    const Path& p = it->second;
    if (!is_valid_path(host, p) || p.edges.empty()) {
      verdict.add("path-validity", "host path of minor edge " + std::to_string(id) + " is not a path");
      continue;
    }
    auto img = [&](VertexId v) {
      auto f = w.vertex_map.find(v);
      return f == w.vertex_map.end() ? -1 : f->second;
    };
    const bool ends = (p.front() == img(e.u) && p.back() == img(e.v)) ||
                      (p.front() == img(e.v) && p.back() == img(e.u));
    if (!ends) {
      verdict.add("endpoints", "host path of minor edge " + std::to_string(id) +
                                   " does not join the images of its endpoints");
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      const VertexId x = p.vertices[i];
      if (image_of.count(x)) {
        verdict.add("internal-image", "inner vertex " + std::to_string(x) + " of edge " +
                                          std::to_string(id) + " is a branch vertex");
      }
      auto [pos, fresh] = inner_owner.emplace(x, id);
      if (!fresh) {
        verdict.add("internal-disjointness", "host vertex " + std::to_string(x) + " is inside paths of " +
                                                 std::to_string(pos->second) + " and " +
                                                 std::to_string(id));
      }
    }
    for (EdgeId he : p.edges) {
      auto [pos, fresh] = host_edge_owner.emplace(he, id);
      if (!fresh) {
        verdict.add("edge-disjointness", "host edge " + std::to_string(he) + " used by minor edges " +
                                             std::to_string(pos->second) + " and " + std::to_string(id));
      }
    }
  }
  return verdict;
}

}  // namespace twsparse
