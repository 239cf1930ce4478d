#include "twsparse/pipeline.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "flow.hpp"
#include "twsparse/two_pair.hpp"

namespace twsparse::pipeline {

void Config::check() const {
  if (h < 2 || h % 2 != 0) throw ArgumentError("h must be even and at least 2, got " + std::to_string(h));
  if (r < 1 || rstar < 1 || N < 1) throw ArgumentError("r, rstar and N must be positive");
  if (r != N * rstar) {
    throw ArgumentError("r = " + std::to_string(r) + " is not N * rstar = " + std::to_string(N) + " * " +
                        std::to_string(rstar));
  }
  if (theta < 1) throw ArgumentError("theta must be at least 1");
}

NominalValues nominal_values(const Config& c) {
  NominalValues p;
  const double h4 = std::pow(static_cast<double>(c.h), 4);
  p.N = static_cast<long long>(std::ceil(3072.0 * std::log2(10.0 * h4 * c.rstar)));
  p.theta = 200.0 * std::pow(static_cast<double>(c.N), 4);
  p.rstar = cmg::default_rounds(c.h);
  return p;
}

namespace {

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool both_routable(const Graph& g, const std::vector<VertexId>& A, const std::vector<VertexId>& B,
                   const std::vector<VertexId>& A1, const std::vector<VertexId>& A2) {
  return route_node_disjoint(g, A, B).ok() && route_node_disjoint(g, A1, A2).ok();
}

}  // namespace

ClusterRouting cluster_iteration(const Graph& g, const std::set<VertexId>& S,
                                 const std::vector<VertexId>& A, const std::vector<VertexId>& B,
                                 const cmg::Partition& p, const std::map<VertexId, int>& f) {
  ClusterRouting c;
  c.A = sorted(A);
  c.B = sorted(B);
  const std::set<int> Y(p.Y.begin(), p.Y.end());
  for (VertexId a : c.A) (Y.count(f.at(a)) ? c.A1 : c.A2).push_back(a);
  if (c.A1.size() != c.A2.size()) throw ArgumentError("partition does not split A evenly");

  const Graph sub = g.induced_subgraph(S);
  const two_pair::TwoPairResult tp = two_pair::route_two_pairs(sub, c.A, c.B, c.A1, c.A2);
  c.J = two_pair::path_union(sub, tp.red, tp.blue);
  std::vector<EdgeId> ids;
  for (const auto& [id, e] : c.J.edges()) ids.push_back(id);
  for (EdgeId id : ids) {
    Graph t = c.J;
    t.remove_edge(id);
    if (both_routable(t, c.A, c.B, c.A1, c.A2)) c.J = std::move(t);
  }
  c.red = route_or_throw(c.J, c.A, c.B, PathRole::red);
  c.blue = route_or_throw(c.J, c.A1, c.A2, PathRole::blue);

  std::set<VertexId> terminals(c.A.begin(), c.A.end());
  terminals.insert(c.B.begin(), c.B.end());
  for (VertexId v : c.J.vertices()) {
    if (c.J.degree(v) == 0 && !terminals.count(v)) c.J.remove_vertex(v);
  }
  std::map<EdgeId, Color> color;
  for (const Path& q : c.red.paths) {
    for (EdgeId e : q.edges) color[e] = Color::red;
  }
  for (const Path& q : c.blue.paths) {
    for (EdgeId e : q.edges) color[e] = color.count(e) ? Color::red_blue : Color::blue;
  }
  for (const auto& [id, e] : std::map<EdgeId, Edge>(c.J.edges())) {
    auto it = color.find(id);
    if (it == color.end()) throw InvariantError("edge " + std::to_string(id) + " on no path after minimization");
    c.J.set_color(id, it->second);
  }

  Suppression s = suppress_degree2(c.J, terminals);
  c.H = std::move(s.graph);
  c.witness = std::move(s.witness);
  for (const Path& q : c.blue.paths) c.matching.emplace_back(f.at(q.front()), f.at(q.back()));
  return c;
}

std::vector<EdgeId> cluster_minimality_violations(const ClusterRouting& c) {
  std::vector<EdgeId> bad;
  for (const auto& [id, e] : c.H.edges()) {
    Graph t = c.H;
    t.remove_edge(id);
    if (both_routable(t, c.A, c.B, c.A1, c.A2)) bad.push_back(id);
  }
  return bad;
}

namespace {

void append(Path& p, const Path& q) {
  if (p.vertices.empty()) {
    p = q;
    return;
  }
  if (p.back() != q.front()) throw InvariantError("horizontal path pieces do not meet");
  p.vertices.insert(p.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  p.edges.insert(p.edges.end(), q.edges.begin(), q.edges.end());
}

// Rewrites a path of J in terms of the glued graph H.
Path project(const Path& p, const Graph& local, const std::map<EdgeId, EdgeId>& jmap) {
  Path out;
  std::size_t last = 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!local.has_vertex(p.vertices[i])) continue;
    if (!out.vertices.empty()) out.edges.push_back(jmap.at(p.edges[last]));
    out.vertices.push_back(p.vertices[i]);
    last = i;
  }
  return out;
}

}  // namespace

Assembly assemble(const pos::System& s, int N, int rstar, Rng& rng) {
  const int h = s.h();
  if (h < 2 || h % 2 != 0) throw ArgumentError("h must be even and at least 2, got " + std::to_string(h));
  if (N < 1 || rstar < 1 || s.r() != N * rstar) throw ArgumentError("system width is not N * rstar");
  Assembly out;
  State& st = out.state;
  st.A = sorted(s.A[0]);
  std::map<VertexId, int> owner;
  std::vector<Path> hp(h);
  for (int i = 0; i < h; ++i) {
    owner[st.A[i]] = i;
    hp[i].vertices = {st.A[i]};
  }

  for (int e = 0; e < N; ++e) {
    ExpanderRun run;
    run.first_cluster = e * rstar;
    cmg::ExpanderState game(h);
    cmg::Embedding& emb = run.embedding;
    emb.vertex_sets.assign(h, {});
    emb.vertex_edges.assign(h, {});
    for (int k = 0; k < rstar; ++k) {
      const int j = e * rstar + k;
      if (j > 0) {
        for (const Path& q : s.connectors[j - 1]) {
          const EdgeId id = st.H.add_edge(q.front(), q.back(), Color::red);
          st.witness.edge_paths[id] = q;
          const int v = owner.at(q.front());
          owner[q.back()] = v;
          append(hp[v], Path{{q.front(), q.back()}, {id}});
          if (k > 0) emb.vertex_edges[v].insert(id);
          emb.vertex_sets[v].insert(q.back());
        }
      }
      if (k == 0) {
        for (int v = 0; v < h; ++v) emb.vertex_sets[v].insert(hp[v].back());
      }

      const cmg::Partition p = cmg::cut_player_partition(game, rng);
      ClusterRouting c = cluster_iteration(s.host, s.clusters[j], s.A[j], s.B[j], p, owner);
      spdlog::debug("cluster {}: |V(H_j)| = {}, |E(H_j)| = {}", j, c.H.num_vertices(), c.H.num_edges());

      for (VertexId v : c.H.vertices()) {
        st.H.add_vertex(v);
        st.witness.vertex_map[v] = v;
        st.cluster_of[v] = j;
      }
      std::map<EdgeId, EdgeId> jmap;
      for (const auto& [id, ed] : c.H.edges()) {
        const EdgeId gid = st.H.add_edge(ed.u, ed.v, ed.color);
        const Path& w = c.witness.edge_paths.at(id);
        st.witness.edge_paths[gid] = w;
        for (EdgeId je : w.edges) jmap[je] = gid;
      }
      for (const Path& q : c.red.paths) {
        const Path pq = project(q, c.H, jmap);
        const int v = owner.at(q.front());
        append(hp[v], pq);
        emb.vertex_sets[v].insert(pq.vertices.begin(), pq.vertices.end());
        emb.vertex_edges[v].insert(pq.edges.begin(), pq.edges.end());
        owner[q.back()] = v;
      }
      for (const Path& q : c.blue.paths) emb.edge_paths.push_back(project(q, c.H, jmap));
      cmg::play_round(game, c.matching);
      st.clusters.push_back(std::move(c));
    }
    emb.x = game.x;
    run.transcript = game.transcript;
    out.expanders.push_back(std::move(run));
  }
  st.horizontal = std::move(hp);
  return out;
}

Assembly embed_expander_degree4(const pos::System& s, Rng& rng) { return assemble(s, 1, s.r(), rng); }

Sampling sample_blue_edges(const Graph& H, Rng& rng) {
  Sampling out;
  std::set<EdgeId> chosen;
  for (VertexId v : H.vertices()) {
    std::vector<EdgeId> blue;
    for (EdgeId e : H.incident(v)) {
      if (H.edge(e).color == Color::blue) blue.push_back(e);
    }
    if (H.degree(v) == 4 && blue.size() != 2) {
      throw InvariantError("degree-4 vertex " + std::to_string(v) + " has " + std::to_string(blue.size()) +
                           " blue edges");
    }
    if (H.degree(v) > 4) throw InvariantError("vertex " + std::to_string(v) + " has degree above 4");
    if (blue.size() != 2) continue;
    const EdgeId pick = blue[rng.below(2)];
    chosen.insert(pick);
    out.chosen_by[pick].push_back(v);
  }
  out.Hstar = H;
  for (EdgeId e : chosen) {
    out.Hstar.remove_edge(e);
    out.deleted.push_back(e);
  }
  if (out.Hstar.max_degree() > 3) throw InvariantError("sampled graph has a vertex of degree 4");
  return out;
}

Segmentation segment_red_paths(const std::vector<Path>& horizontal,
                               const std::map<VertexId, int>& cluster_of, int theta) {
  if (theta < 1) throw ArgumentError("theta must be at least 1");
  using Run = std::vector<VertexId>;
  auto heavy = [&](Run::const_iterator b, Run::const_iterator e) {
    std::map<int, int> count;
    for (auto it = b; it != e; ++it) {
      auto c = cluster_of.find(*it);
      if (c != cluster_of.end() && ++count[c->second] >= theta) return true;
    }
    return false;
  };
  Segmentation seg;
  for (const Path& p : horizontal) {
    const Run& v = p.vertices;
    std::vector<Run> pieces;
    if (!heavy(v.begin(), v.end())) {
      pieces.push_back(v);
    } else {
      auto start = v.begin();
      while (true) {
        // Shortest heavy prefix of the remainder.
        std::map<int, int> count;
        auto cut = start;
        while (cut != v.end()) {
          auto c = cluster_of.find(*cut);
          ++cut;
          if (c != cluster_of.end() && ++count[c->second] >= theta) break;
        }
        if (cut != v.end() && heavy(cut, v.end())) {
          pieces.emplace_back(start, cut);
          start = cut;
        } else {
          pieces.emplace_back(start, v.end());
          break;
        }
      }
    }
    seg.push_back(std::move(pieces));
  }
  return seg;
}

Contracted contract_segments(const State& st, const Segmentation& seg, const Graph& Hstar) {
  Contracted c;
  int next = 0;
  for (const auto& pieces : seg) {
    for (const auto& piece : pieces) {
      for (VertexId v : piece) {
        if (!c.node_of.emplace(v, next).second) throw InvariantError("vertex " + std::to_string(v) + " in two segments");
      }
      ++next;
    }
  }
  for (VertexId v : st.H.vertices()) {
    if (!c.node_of.count(v)) throw InvariantError("vertex " + std::to_string(v) + " lies on no horizontal path");
  }
  c.F.n = c.Fstar.n = next;
  auto fill = [&](const Graph& g, Multigraph& m) {
    for (const auto& [id, e] : g.edges()) {
      const int a = c.node_of.at(e.u);
      const int b = c.node_of.at(e.v);
      if (a == b) continue;
      m.edges.emplace_back(std::min(a, b), std::max(a, b));
      m.origin.push_back(id);
    }
  };
  fill(st.H, c.F);
  fill(Hstar, c.Fstar);
  for (VertexId a : st.A) c.U.push_back(c.node_of.at(a));
  return c;
}

std::set<VertexId> lift(const Contracted& c, const std::set<int>& side) {
  std::set<VertexId> out;
  for (const auto& [v, n] : c.node_of) {
    if (side.count(n)) out.insert(v);
  }
  return out;
}

std::size_t out_degree(const Multigraph& m, const std::set<int>& side) {
  std::size_t k = 0;
  for (auto [a, b] : m.edges) {
    if (side.count(a) != side.count(b)) ++k;
  }
  return k;
}

MinCutVerdict verify_min_cut_F(const Multigraph& F, long long N) {
  MinCutVerdict v;
  v.N = N;
  if (F.n < 2) return v;
  std::vector<WeightedEdge> edges;
  for (auto [a, b] : F.edges) edges.push_back({a, b, 1.0});
  const CutReport r = global_min_cut(F.n, edges);
  v.value = static_cast<long long>(std::llround(r.objective));
  v.side = std::set<int>(r.side.begin(), r.side.end());
  v.holds = v.value >= N;
  return v;
}

PreservationReport verify_sampling_preservation(const Multigraph& F, const Multigraph& Fstar,
                                                double factor, int samples, std::uint64_t seed) {
  PreservationReport rep;
  const int n = F.n;
  std::vector<char> in(n, 0);
  auto count = [&](const Multigraph& m) {
    long long k = 0;
    for (auto [a, b] : m.edges) k += in[a] != in[b];
    return k;
  };
  auto test = [&]() {
    const long long of = count(F);
    if (of == 0) return;
    const double ratio = static_cast<double>(count(Fstar)) / static_cast<double>(of);
    ++rep.cuts_tested;
    if (ratio < 1.0 / factor) ++rep.violations;
    if (rep.cuts_tested == 1 || ratio < rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_side.clear();
      for (int v = 0; v < n; ++v) {
        if (in[v]) rep.worst_side.insert(v);
      }
    }
  };
  if (n < 2) return rep;
  if (n <= 20) {
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << (n - 1)); ++m) {
      for (int v = 0; v < n; ++v) in[v] = static_cast<char>(m >> v & 1);
      test();
    }
    return rep;
  }
  rep.exhaustive = false;
  for (int s = 0; s < n; ++s) {
    std::fill(in.begin(), in.end(), 0);
    in[s] = 1;
    test();
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    int size = 0;
    for (int v = 0; v < n; ++v) size += (in[v] = static_cast<char>(rng.below(2)));
    if (size == 0 || size == n) continue;
    test();
  }
  return rep;
}

WellLinkedness measure_well_linkedness(const Multigraph& m, const std::vector<int>& terminals,
                                       std::uint64_t budget) {
  WellLinkedness w;
  const int t = static_cast<int>(terminals.size());
  if (t < 2) return w;
  const std::uint64_t splits = t >= 64 ? UINT64_MAX : (std::uint64_t{1} << (t - 1)) - 1;
  std::vector<std::uint64_t> masks;
  if (splits <= budget) {
    for (std::uint64_t s = 1; s <= splits; ++s) masks.push_back(s);
  } else {
    w.exact = false;
    Rng rng(0);
    for (int i = 0; i < t; ++i) masks.push_back(std::uint64_t{1} << i);
    for (int i = 0; i < 4096; ++i) masks.push_back(rng.next() & splits);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask : masks) {
    int x = 0;
    for (int i = 0; i < t; ++i) x += static_cast<int>(mask >> i & 1);
    if (x == 0 || x == t) continue;
    detail::MaxFlow flow(m.n + 2);
    for (auto [a, b] : m.edges) {
      flow.add_arc(a, b, 1);
      flow.add_arc(b, a, 1);
    }
    for (int i = 0; i < t; ++i) {
      if (mask >> i & 1) {
        flow.add_arc(m.n, terminals[i], detail::MaxFlow::kInf);
      } else {
        flow.add_arc(terminals[i], m.n + 1, detail::MaxFlow::kInf);
      }
    }
    const double value = static_cast<double>(flow.run(m.n, m.n + 1));
    best = std::min(best, value / std::min(x, t - x));
  }
  w.alpha = std::isinf(best) ? 0.0 : best;
  return w;
}

Multigraph to_multigraph(const Graph& g, std::map<VertexId, int>* index) {
  std::map<VertexId, int> local;
  std::map<VertexId, int>& idx = index ? *index : local;
  idx.clear();
  Multigraph m;
  for (VertexId v : g.vertices()) idx[v] = m.n++;
  for (const auto& [id, e] : g.edges()) {
    m.edges.emplace_back(idx[e.u], idx[e.v]);
    m.origin.push_back(id);
  }
  return m;
}

namespace {

Run finish(const pos::System& s, const Config& c, int degree, int N, int rstar) {
  if (s.h() != c.h || s.r() != c.r) throw ArgumentError("configuration does not match the system size");
  Rng rng(c.seed);
  Assembly a = assemble(s, N, rstar, rng);
  Run run;
  run.config = c;
  run.degree = degree;
  run.state = std::move(a.state);
  run.expanders = std::move(a.expanders);
  if (degree == 3) {
    run.sampling = sample_blue_edges(run.state.H, rng);
  } else {
    run.sampling.Hstar = run.state.H;
  }
  run.segments = segment_red_paths(run.state.horizontal, run.state.cluster_of, c.theta);
  return run;
}

}  // namespace

Run build_degree3(const pos::System& s, const Config& c) {
  c.check();
  return finish(s, c, 3, c.N, c.rstar);
}

Run build_degree4(const pos::System& s, const Config& c) {
  c.check();
  return finish(s, c, 4, 1, c.r);
}

}  // namespace twsparse::pipeline
