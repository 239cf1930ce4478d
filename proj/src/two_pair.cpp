#include "twsparse/two_pair.hpp"

#include <algorithm>
#include <deque>

#include <spdlog/spdlog.h>

namespace twsparse::two_pair {

std::set<VertexId> Instance::terminals() const {
  std::set<VertexId> out;
  for (const auto* set : {&S1c, &T1c, &S2c, &T2c}) out.insert(set->begin(), set->end());
  return out;
}

long long minor_size_bound(int k) {
  const long long kk = k;
  return 4 * kk * kk * kk * kk + 4 * kk;
}

long long lifted_tau_bound(int k) { return 2 * minor_size_bound(k); }

namespace {

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Instance pad_and_attach(const Graph& g, const std::vector<VertexId>& S1,
                        const std::vector<VertexId>& T1, const std::vector<VertexId>& S2,
                        const std::vector<VertexId>& T2) {
  if (S1.size() != T1.size() || S2.size() != T2.size()) {
    throw ArgumentError("each pair needs sets of equal size");
  }
  if (S2.size() > S1.size()) throw ArgumentError("pad_and_attach expects k2 <= k1");
  for (const auto* pair : {&S1, &S2}) {
    const auto& S = *pair;
    const auto& T = pair == &S1 ? T1 : T2;
    RouteResult r = route_node_disjoint(g, S, T);
    if (!r.ok()) {
      throw InfeasibleError(std::string(pair == &S1 ? "first" : "second") +
                                " pair is not routable in the input graph",
                            r.cut);
    }
  }

  Instance inst;
  inst.original = g;
  inst.graph = g;
  inst.k1 = static_cast<int>(S1.size());
  inst.k2 = static_cast<int>(S2.size());
  inst.S1 = sorted(S1);
  inst.T1 = sorted(T1);
  inst.S2 = sorted(S2);
  inst.T2 = sorted(T2);

  VertexId next = g.max_vertex_id() + 1;
  for (int i = 0; i < inst.k1 - inst.k2; ++i) {
    const VertexId a = next++;
    const VertexId b = next++;
    inst.dummy_edges.insert(inst.graph.add_edge(a, b));
    inst.dummy_vertices.insert({a, b});
    inst.S2.push_back(a);
    inst.T2.push_back(b);
  }
  const std::pair<const std::vector<VertexId>*, std::vector<VertexId>*> groups[] = {
      {&inst.S1, &inst.S1c}, {&inst.T1, &inst.T1c}, {&inst.S2, &inst.S2c}, {&inst.T2, &inst.T2c}};
  for (auto [from, to] : groups) {
    for (VertexId x : *from) {
      const VertexId c = next++;
      inst.graph.add_edge(c, x);
      inst.attached_to[c] = x;
      to->push_back(c);
    }
  }
  if (!route_node_disjoint(inst.graph, inst.S1c, inst.T1c).ok() ||
      !route_node_disjoint(inst.graph, inst.S2c, inst.T2c).ok()) {
    throw InvariantError("padding broke routability");
  }
  return inst;
}

namespace {

struct Routings {
  RouteResult red;
  RouteResult blue;

  bool ok() const { return red.ok() && blue.ok(); }
};

Routings route_both(const Instance& inst, const Graph& h) {
  return {route_node_disjoint(h, inst.S1c, inst.T1c, PathRole::red),
          route_node_disjoint(h, inst.S2c, inst.T2c, PathRole::blue)};
}

std::set<EdgeId> used_edges(const PathSet& a, const PathSet& b) {
  std::set<EdgeId> out;
  for (const auto* ps : {&a, &b}) {
    for (const Path& p : ps->paths) out.insert(p.edges.begin(), p.edges.end());
  }
  return out;
}

bool touches_terminal(const Edge& e, const std::set<VertexId>& terminals) {
  return terminals.count(e.u) || terminals.count(e.v);
}

}  // namespace

std::vector<MinimalityEntry> check_minimality(const Instance& inst, const Graph& minor) {
  const std::set<VertexId> terminals = inst.terminals();
  std::vector<MinimalityEntry> out;
  for (const auto& [id, e] : minor.edges()) {
    MinimalityEntry entry;
    entry.edge = id;
    Routings del = route_both(inst, delete_edge(minor, id));
    entry.delete_breaks_red = !del.red.ok();
    entry.delete_breaks_blue = !del.blue.ok();
    if (touches_terminal(e, terminals)) {
      entry.contract_skipped = true;
    } else {
      Routings con = route_both(inst, contract_edge(minor, id));
      entry.contract_breaks_red = !con.red.ok();
      entry.contract_breaks_blue = !con.blue.ok();
    }
    out.push_back(entry);
  }
  return out;
}

GoodMinor minimal_good_minor(const Instance& inst) {
  const std::set<VertexId> terminals = inst.terminals();
  GoodMinor m;
  m.minor = inst.graph;
  m.model = MinorModel::identity(inst.graph);
  Routings cur = route_both(inst, m.minor);
  if (!cur.ok()) throw InvariantError("padded instance is not good");
  std::set<EdgeId> used = used_edges(*cur.red.routing, *cur.blue.routing);

  // A failed edit stays failed in every smaller minor, so one ascending
  // pass per edit kind reaches the same fixpoint as restarting the scan.
  std::vector<EdgeId> ids;
  for (const auto& [id, e] : m.minor.edges()) ids.push_back(id);
  for (EdgeId id : ids) {
    if (!m.minor.has_edge(id)) continue;
    const Edit ed{EditKind::delete_edge, id};
    EditResult r = edit(m.minor, ed);
    if (used.count(id)) {
      Routings next = route_both(inst, r.graph);
      if (!next.ok()) continue;
      cur = std::move(next);
      used = used_edges(*cur.red.routing, *cur.blue.routing);
    }
    m.model = r.update(m.model);
    m.minor = std::move(r.graph);
    m.edits.push_back(ed);
  }
  for (EdgeId id : ids) {
    if (!m.minor.has_edge(id) || touches_terminal(m.minor.edge(id), terminals)) continue;
    const Edit ed{EditKind::contract_edge, id};
    EditResult r = edit(m.minor, ed);
    Routings next = route_both(inst, r.graph);
    if (!next.ok()) continue;
    cur = std::move(next);
    m.model = r.update(m.model);
    m.minor = std::move(r.graph);
    m.edits.push_back(ed);
  }
  for (VertexId v : m.minor.vertices()) {
    if (m.minor.degree(v) == 0 && !terminals.count(v)) {
      const Edit ed{EditKind::delete_vertex, v};
      EditResult r = edit(m.minor, ed);
      m.model = r.update(m.model);
      m.minor = std::move(r.graph);
      m.edits.push_back(ed);
    }
  }
  cur = route_both(inst, m.minor);
  m.red = std::move(*cur.red.routing);
  m.blue = std::move(*cur.blue.routing);
  m.certificate = check_minimality(inst, m.minor);
  spdlog::debug("minimal minor: {} vertices, {} edges after {} edits", m.minor.num_vertices(),
                m.minor.num_edges(), m.edits.size());
  return m;
}

Verdict verify_good_minor(const Instance& inst, const GoodMinor& m) {
  Verdict v;
  const std::set<VertexId> terminals = inst.terminals();
  for (const Violation& x :
       verify_minor_model(inst.graph, m.minor, m.model, terminals).violations) {
    v.add("model/" + x.clause, x.detail);
  }
  for (const auto* ps : {&m.red, &m.blue}) {
    for (const Violation& x : verify_path_set(m.minor, *ps).violations) {
      v.add(std::string(to_string(ps->role)) + "/" + x.clause, x.detail);
    }
  }
  std::map<EdgeId, int> edge_uses;
  std::map<VertexId, int> red_hits;
  std::map<VertexId, int> blue_hits;
  for (const Path& p : m.red.paths) {
    for (EdgeId e : p.edges) ++edge_uses[e];
    for (VertexId x : p.vertices) ++red_hits[x];
  }
  for (const Path& p : m.blue.paths) {
    for (EdgeId e : p.edges) ++edge_uses[e];
    for (VertexId x : p.vertices) ++blue_hits[x];
  }
  for (const auto& [id, e] : m.minor.edges()) {
    if (edge_uses[id] != 1) {
      v.add("edge-coloring", "edge " + std::to_string(id) + " lies on " +
                                 std::to_string(edge_uses[id]) + " paths");
    }
  }
  for (VertexId x : m.minor.vertices()) {
    if (terminals.count(x)) continue;
    // The lone inner vertex of a path may miss the other colour.
    bool lone = red_hits[x] + blue_hits[x] == 1 && m.minor.degree(x) == 2;
    for (VertexId y : m.minor.neighbors(x)) lone = lone && terminals.count(y);
    if ((red_hits[x] != 1 || blue_hits[x] != 1) && !lone) {
      v.add("vertex-coverage", "vertex " + std::to_string(x) + " lies on " +
                                   std::to_string(red_hits[x]) + " red and " +
                                   std::to_string(blue_hits[x]) + " blue paths");
    }
  }
  for (const Path& p : m.red.paths) {
    for (EdgeId e : p.edges) {
      if (route_node_disjoint(delete_edge(m.minor, e), inst.S1c, inst.T1c).ok()) {
        v.add("uniqueness", "red routing survives without edge " + std::to_string(e));
      }
    }
  }
  for (const Path& p : m.blue.paths) {
    for (EdgeId e : p.edges) {
      if (route_node_disjoint(delete_edge(m.minor, e), inst.S2c, inst.T2c).ok()) {
        v.add("uniqueness", "blue routing survives without edge " + std::to_string(e));
      }
    }
  }
  const long long bound = minor_size_bound(inst.k1);
  if (static_cast<long long>(m.minor.num_vertices()) > bound) {
    v.add("size-bound", std::to_string(m.minor.num_vertices()) + " vertices exceed " +
                            std::to_string(bound));
  }
  return v;
}

std::vector<ColoredArc> oriented_arcs(const PathSet& red, const PathSet& blue) {
  std::vector<ColoredArc> out;
  for (auto [ps, c] : {std::pair{&red, Color::red}, std::pair{&blue, Color::blue}}) {
    for (const Path& p : ps->paths) {
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        out.push_back({p.vertices[i], p.vertices[i + 1], p.edges[i], c});
      }
    }
  }
  return out;
}

namespace {

PathSet reversed(const PathSet& ps) {
  PathSet out = ps;
  std::swap(out.sources, out.sinks);
  for (Path& p : out.paths) {
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
  }
  std::sort(out.paths.begin(), out.paths.end(),
            [](const Path& a, const Path& b) { return a.front() < b.front(); });
  return out;
}

std::vector<Chain> grow_chains(const PathSet& red, const PathSet& blue) {
  std::map<VertexId, ColoredArc> red_out;
  std::map<VertexId, ColoredArc> blue_out;
  for (const ColoredArc& a : oriented_arcs(red, blue)) {
    auto& out = a.color == Color::red ? red_out : blue_out;
    if (!out.emplace(a.from, a).second) {
      throw InvariantError("vertex " + std::to_string(a.from) + " has two outgoing " +
                           std::string(to_string(a.color)) + " edges");
    }
  }
  std::set<VertexId> on_red;
  std::set<VertexId> on_blue;
  for (const Path& p : red.paths) on_red.insert(p.vertices.begin(), p.vertices.end());
  for (const Path& p : blue.paths) on_blue.insert(p.vertices.begin(), p.vertices.end());
  std::vector<Chain> chains;
  for (auto [ps, first] : {std::pair{&red, &red_out}, std::pair{&blue, &blue_out}}) {
    for (const Path& p : ps->paths) {
      Chain z;
      z.vertices.push_back(p.front());
      std::set<VertexId> seen{p.front()};
      auto lookup = [](const std::map<VertexId, ColoredArc>& out, VertexId x) {
        auto it = out.find(x);
        return it == out.end() ? nullptr : &it->second;
      };
      const ColoredArc* a = lookup(*first, p.front());
      while (a) {
        z.edges.push_back(a->edge);
        z.colors.push_back(a->color);
        z.vertices.push_back(a->to);
        if (!seen.insert(a->to).second) break;
        const bool single = !(on_red.count(a->to) && on_blue.count(a->to));
        const ColoredArc* next = lookup(a->color == Color::red ? blue_out : red_out, a->to);
        // A vertex on one path only continues in its own colour.
        if (!next && single) next = lookup(a->color == Color::red ? red_out : blue_out, a->to);
        a = next;
      }
      chains.push_back(std::move(z));
    }
  }
  return chains;
}

std::map<VertexId, int> first_chain_labels(const std::vector<Chain>& chains) {
  std::map<VertexId, int> label;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    for (VertexId v : chains[i].vertices) label.emplace(v, i);
  }
  return label;
}

}  // namespace

ChainSystem build_chains(const GoodMinor& m) {
  ChainSystem cs;
  cs.forward = grow_chains(m.red, m.blue);
  cs.reverse = grow_chains(reversed(m.red), m.blue);
  cs.label = first_chain_labels(cs.forward);
  cs.reverse_label = first_chain_labels(cs.reverse);
  return cs;
}

namespace {

using Walk = std::vector<ColoredArc>;

bool walk_ok(const Walk& w, Color single) {
  bool has_single = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool s = w[i].color == single;
    has_single |= s;
    if (s && w[(i + 1) % w.size()].color == single) return false;
  }
  return has_single;
}

Walk make_simple(Walk w, Color single) {
  while (true) {
    std::map<VertexId, std::size_t> first;
    std::size_t i = 0;
    std::size_t j = 0;
    bool repeat = false;
    for (std::size_t x = 0; x < w.size(); ++x) {
      auto [it, fresh] = first.emplace(w[x].from, x);
      if (!fresh) {
        i = it->second;
        j = x;
        repeat = true;
        break;
      }
    }
    if (!repeat) return w;
    Walk a(w.begin() + i, w.begin() + j);
    Walk b(w.begin() + j, w.end());
    b.insert(b.end(), w.begin(), w.begin() + i);
    if (walk_ok(a, single)) {
      w = std::move(a);
    } else if (walk_ok(b, single)) {
      w = std::move(b);
    } else {
      throw InvariantError("closed walk does not reduce to a simple cycle");
    }
  }
}

}  // namespace

std::optional<ColoredCycle> find_alternating_cycle(const std::vector<ColoredArc>& arcs,
                                                   Color single) {
  std::map<VertexId, int> index;
  for (const ColoredArc& a : arcs) {
    index.emplace(a.from, 0);
    index.emplace(a.to, 0);
  }
  int n = 0;
  for (auto& [v, i] : index) i = n++;
  // State 2i: arrived at vertex i by a `single` arc; 2i+1: by any other arc.
  const int states = 2 * n;
  std::vector<std::vector<std::pair<int, int>>> out(states);  // (state, arc index)
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    const int u = index[arcs[a].from];
    const int v = index[arcs[a].to];
    const bool s = arcs[a].color == single;
    const int to = 2 * v + (s ? 0 : 1);
    if (!s) out[2 * u].push_back({to, a});
    out[2 * u + 1].push_back({to, a});
  }

  // Tarjan's strongly connected components, iterative.
  std::vector<int> comp(states, -1);
  std::vector<int> low(states, 0);
  std::vector<int> order(states, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(states, false);
  int counter = 0;
  int ncomp = 0;
  for (int root = 0; root < states; ++root) {
    if (order[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [x, next] = call.back();
      if (next < out[x].size()) {
        const int y = out[x][next++].first;
        if (order[y] < 0) {
          order[y] = low[y] = counter++;
          stack.push_back(y);
          on_stack[y] = true;
          call.push_back({y, 0});
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], order[y]);
        }
        continue;
      }
      if (low[x] == order[x]) {
        while (true) {
          const int y = stack.back();
          stack.pop_back();
          on_stack[y] = false;
          comp[y] = ncomp;
          if (y == x) break;
        }
        ++ncomp;
      }
      const int done = x;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  for (int x = 0; x < states; ++x) {
    for (auto [y, a] : out[x]) {
      if (arcs[a].color != single || comp[x] != comp[y]) continue;
      // Close the walk with a shortest path from y back to x inside the component.
      std::vector<std::pair<int, int>> via(states, {-1, -1});
      std::deque<int> queue{y};
      via[y] = {y, -1};
      while (!queue.empty() && via[x].first < 0) {
        const int z = queue.front();
        queue.pop_front();
        for (auto [w, b] : out[z]) {
          if (comp[w] == comp[x] && via[w].first < 0) {
            via[w] = {z, b};
            queue.push_back(w);
          }
        }
      }
      Walk back;
      for (int z = x; z != y; z = via[z].first) back.push_back(arcs[via[z].second]);
      std::reverse(back.begin(), back.end());
      Walk w{arcs[a]};
      w.insert(w.end(), back.begin(), back.end());
      w = make_simple(std::move(w), single);
      ColoredCycle c;
      for (const ColoredArc& arc : w) {
        c.vertices.push_back(arc.from);
        c.edges.push_back(arc.edge);
        c.colors.push_back(arc.color);
      }
      return c;
    }
  }
  return std::nullopt;
}

namespace {

std::map<VertexId, int> positions(const std::vector<VertexId>& seq) {
  std::map<VertexId, int> pos;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) pos.emplace(seq[i], i);
  return pos;
}

void check_system(const GoodMinor& m, const PathSet& red, const std::vector<Chain>& chains,
                  const std::map<VertexId, int>& label, const std::string& tag, Verdict& v) {
  const int k = static_cast<int>(red.paths.size());
  if (static_cast<int>(chains.size()) != 2 * k) {
    v.add("label-count", tag + ": " + std::to_string(chains.size()) + " chains for k=" +
                             std::to_string(k));
  }
  std::set<VertexId> on_red;
  std::set<VertexId> on_blue;
  for (const Path& p : red.paths) on_red.insert(p.vertices.begin(), p.vertices.end());
  for (const Path& p : m.blue.paths) on_blue.insert(p.vertices.begin(), p.vertices.end());
  std::set<EdgeId> covered;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const Chain& z = chains[i];
    if (positions(z.vertices).size() != z.vertices.size()) {
      v.add("chain-simple", tag + ": chain " + std::to_string(i) + " repeats a vertex");
    }
    for (std::size_t j = 0; j + 1 < z.colors.size(); ++j) {
      const VertexId x = z.vertices[j + 1];
      if (z.colors[j] == z.colors[j + 1] && on_red.count(x) && on_blue.count(x)) {
        v.add("chain-alternation", tag + ": chain " + std::to_string(i) + " repeats a colour");
      }
    }
    covered.insert(z.edges.begin(), z.edges.end());
  }
  for (const auto& [id, e] : m.minor.edges()) {
    if (!covered.count(id)) v.add("coverage", tag + ": edge " + std::to_string(id) + " on no chain");
  }
  for (VertexId x : m.minor.vertices()) {
    if (!label.count(x)) v.add("coverage", tag + ": vertex " + std::to_string(x) + " unlabeled");
  }

  std::vector<const Path*> all;
  for (const Path& p : red.paths) all.push_back(&p);
  for (const Path& p : m.blue.paths) all.push_back(&p);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto zpos = positions(chains[i].vertices);
    for (const Path* p : all) {
      int last = -1;
      for (VertexId x : p->vertices) {
        auto it = zpos.find(x);
        if (it == zpos.end()) continue;
        if (it->second < last) {
          v.add("order", tag + ": chain " + std::to_string(i) + " and the path from " +
                             std::to_string(p->front()) + " disagree on order");
          break;
        }
        last = it->second;
      }
    }
  }

  for (const Path& r : red.paths) {
    const auto rpos = positions(r.vertices);
    for (const Path& b : m.blue.paths) {
      std::map<int, std::vector<VertexId>> by_label;
      for (VertexId x : b.vertices) {
        if (rpos.count(x) && label.count(x)) by_label[label.at(x)].push_back(x);
      }
      for (const auto& [l, xs] : by_label) {
        for (std::size_t j = 1; j < xs.size(); ++j) {
          if (rpos.at(xs[j - 1]) > rpos.at(xs[j])) {
            v.add("labeling", tag + ": label " + std::to_string(l) + " orders the red path from " +
                                  std::to_string(r.front()) + " against the blue path from " +
                                  std::to_string(b.front()));
          }
        }
      }
    }
  }
}

}  // namespace

Verdict verify_chain_properties(const GoodMinor& m, const ChainSystem& cs) {
  Verdict v;
  const PathSet rev = reversed(m.red);
  check_system(m, m.red, cs.forward, cs.label, "forward", v);
  check_system(m, rev, cs.reverse, cs.reverse_label, "reverse", v);

  for (const auto* red : {&m.red, &rev}) {
    const auto arcs = oriented_arcs(*red, m.blue);
    const std::string tag = red == &m.red ? "forward" : "reverse";
    if (auto c = find_alternating_cycle(arcs, Color::red)) {
      v.add("no-cycle", tag + ": blue cycle through " + std::to_string(c->vertices.front()));
    }
    if (auto c = find_alternating_cycle(arcs, Color::blue)) {
      v.add("no-cycle", tag + ": red cycle through " + std::to_string(c->vertices.front()));
    }
  }

  std::map<VertexId, int> red_of;
  std::map<VertexId, int> blue_of;
  for (int i = 0; i < static_cast<int>(m.red.paths.size()); ++i) {
    for (VertexId x : m.red.paths[i].vertices) red_of[x] = i;
  }
  for (int i = 0; i < static_cast<int>(m.blue.paths.size()); ++i) {
    for (VertexId x : m.blue.paths[i].vertices) blue_of[x] = i;
  }
  std::map<std::tuple<int, int, int, int>, VertexId> seen;
  for (VertexId x : m.minor.vertices()) {
    if (!red_of.count(x) || !blue_of.count(x)) continue;
    if (!cs.label.count(x) || !cs.reverse_label.count(x)) continue;
    auto key = std::make_tuple(red_of[x], blue_of[x], cs.label.at(x), cs.reverse_label.at(x));
    auto [it, fresh] = seen.emplace(key, x);
    if (!fresh) {
      v.add("quadruple", "vertices " + std::to_string(it->second) + " and " + std::to_string(x) +
                             " share a quadruple");
    }
  }
  return v;
}

namespace {

/// Shortest path inside host[within] from a to b, neighbours by edge id.
Path inner_path(const Graph& host, const std::set<VertexId>& within, VertexId a, VertexId b) {
  std::map<VertexId, std::pair<VertexId, EdgeId>> via{{a, {a, -1}}};
  std::deque<VertexId> queue{a};
  while (!queue.empty() && !via.count(b)) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : host.incident(x)) {
      const VertexId y = host.edge(e).other(x);
      if (within.count(y) && !via.count(y)) {
        via[y] = {x, e};
        queue.push_back(y);
      }
    }
  }
  if (!via.count(b)) throw InvariantError("branch set is not connected");
  Path p;
  for (VertexId x = b; x != a; x = via[x].first) {
    p.vertices.push_back(x);
    p.edges.push_back(via[x].second);
  }
  p.vertices.push_back(a);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

void append(Path& p, const Path& q) {
  // q starts at p.back()
  p.vertices.insert(p.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  p.edges.insert(p.edges.end(), q.edges.begin(), q.edges.end());
}

Path slice(const Path& p, std::size_t from, std::size_t to) {
  Path out;
  if (from <= to) {
    out.vertices.assign(p.vertices.begin() + from, p.vertices.begin() + to + 1);
    out.edges.assign(p.edges.begin() + from, p.edges.begin() + to);
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.vertices.push_back(p.vertices[i]);
    for (std::size_t i = from; i-- > to;) out.edges.push_back(p.edges[i]);
  }
  return out;
}

/// Lifts a minor path and strips the pendant copies at both ends. `inner`
/// receives, for every inner minor vertex, the host segment used inside it.
Path lift_path(const Instance& inst, const GoodMinor& m, const Path& minor_path,
               const std::map<VertexId, Path>* red_segments, std::map<VertexId, Path>* inner) {
  const Graph& host = inst.graph;
  const std::size_t r = minor_path.vertices.size() - 2;
  std::vector<Edge> hosted;
  for (EdgeId e : minor_path.edges) hosted.push_back(host.edge(m.model.edge_map.at(e)));
  Path out;
  for (std::size_t i = 1; i <= r; ++i) {
    const VertexId mv = minor_path.vertices[i];
    const std::set<VertexId>& branch = m.model.branch.at(mv);
    const Edge& in = hosted[i - 1];
    const Edge& outgoing = hosted[i];
    const VertexId a = branch.count(in.u) ? in.u : in.v;
    const VertexId b = branch.count(outgoing.u) ? outgoing.u : outgoing.v;
    Path seg = inner_path(host, branch, a, b);
    if (red_segments) {
      auto it = red_segments->find(mv);
      if (it != red_segments->end()) {
        const Path& r1 = it->second;
        const auto rpos = positions(r1.vertices);
        std::size_t first = seg.vertices.size();
        std::size_t last = 0;
        for (std::size_t j = 0; j < seg.vertices.size(); ++j) {
          if (rpos.count(seg.vertices[j])) {
            first = std::min(first, j);
            last = j;
          }
        }
        if (first < seg.vertices.size()) {
          Path spliced = slice(seg, 0, first);
          append(spliced, slice(r1, rpos.at(seg.vertices[first]), rpos.at(seg.vertices[last])));
          append(spliced, slice(seg, last, seg.vertices.size() - 1));
          seg = std::move(spliced);
        }
      }
    }
    if (inner) (*inner)[mv] = seg;
    if (i == 1) {
      out = seg;
    } else {
      out.vertices.insert(out.vertices.end(), seg.vertices.begin(), seg.vertices.end());
      out.edges.push_back(hosted[i - 1].id);
      out.edges.insert(out.edges.end(), seg.edges.begin(), seg.edges.end());
    }
  }
  return out;
}

}  // namespace

Lifted lift_to_original(const Instance& inst, const GoodMinor& m) {
  Lifted out;
  out.red.role = PathRole::red;
  out.blue.role = PathRole::blue;
  out.red.sources = inst.S1;
  out.red.sinks = inst.T1;
  std::map<VertexId, Path> red_segments;
  for (const Path& p : m.red.paths) {
    out.red.paths.push_back(lift_path(inst, m, p, nullptr, &red_segments));
  }
  for (VertexId s : inst.S2) {
    if (!inst.dummy_vertices.count(s)) out.blue.sources.push_back(s);
  }
  for (VertexId t : inst.T2) {
    if (!inst.dummy_vertices.count(t)) out.blue.sinks.push_back(t);
  }
  for (const Path& p : m.blue.paths) {
    if (inst.dummy_vertices.count(inst.attached_to.at(p.front()))) continue;
    out.blue.paths.push_back(lift_path(inst, m, p, &red_segments, nullptr));
  }
  for (auto* ps : {&out.red, &out.blue}) {
    std::sort(ps->paths.begin(), ps->paths.end(),
              [](const Path& a, const Path& b) { return a.front() < b.front(); });
  }
  return out;
}

Graph path_union(const Graph& host, const PathSet& a, const PathSet& b) {
  std::set<EdgeId> edges;
  std::set<VertexId> verts;
  for (const auto* ps : {&a, &b}) {
    for (const Path& p : ps->paths) {
      edges.insert(p.edges.begin(), p.edges.end());
      verts.insert(p.vertices.begin(), p.vertices.end());
    }
  }
  Graph out = host.edge_subgraph(edges);
  for (VertexId v : verts) out.add_vertex(v);
  return out;
}

TwoPairResult route_two_pairs(const Graph& g, const std::vector<VertexId>& S1,
                              const std::vector<VertexId>& T1, const std::vector<VertexId>& S2,
                              const std::vector<VertexId>& T2) {
  TwoPairResult res;
  res.swapped = S2.size() > S1.size();
  res.instance = res.swapped ? pad_and_attach(g, S2, T2, S1, T1) : pad_and_attach(g, S1, T1, S2, T2);
  res.minor = minimal_good_minor(res.instance);
  Lifted lifted = lift_to_original(res.instance, res.minor);
  if (res.swapped) std::swap(lifted.red, lifted.blue);
  res.red = std::move(lifted.red);
  res.blue = std::move(lifted.blue);
  res.red.role = PathRole::red;
  res.blue.role = PathRole::blue;
  return res;
}

}  // namespace twsparse::two_pair
