#include "twsparse/certificate.hpp"

#include <algorithm>
#include <cmath>

namespace twsparse::cert {

using pipeline::Run;

TopoWitness sparsifier_witness(const Run& run) {
  TopoWitness w;
  for (VertexId v : run.sampling.Hstar.vertices()) w.vertex_map[v] = run.state.witness.vertex_map.at(v);
  for (const auto& [id, e] : run.sampling.Hstar.edges()) w.edge_paths[id] = run.state.witness.edge_paths.at(id);
  return w;
}

namespace {

long long pow4(int h) { return 1LL * h * h * h * h; }

bool degree_ledger(const Graph& H) {
  for (VertexId v : H.vertices()) {
    const std::size_t d = H.degree(v);
    if (d > 4) return false;
    if (d == 4) {
      int blue = 0;
      for (EdgeId e : H.incident(v)) blue += H.edge(e).color == Color::blue;
      if (blue != 2) return false;
    }
  }
  return true;
}

bool covers(const Run& run) {
  const auto& hp = run.state.horizontal;
  const Graph& H = run.state.H;
  if (static_cast<int>(hp.size()) != run.config.h || run.state.A.size() != hp.size()) return false;
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < hp.size(); ++i) {
    if (hp[i].vertices.empty() || !is_valid_path(H, hp[i]) || hp[i].front() != run.state.A[i]) return false;
    for (VertexId v : hp[i].vertices) {
      if (!seen.insert(v).second) return false;
    }
  }
  return seen.size() == H.num_vertices();
}

bool sampling_log(const Run& run, const Graph& Hstar) {
  const Graph& H = run.state.H;
  const auto& del = run.sampling.deleted;
  if (!std::is_sorted(del.begin(), del.end()) || std::adjacent_find(del.begin(), del.end()) != del.end()) {
    return false;
  }
  if (run.degree == 4 && !del.empty()) return false;
  if (run.sampling.chosen_by.size() != del.size()) return false;
  Graph expect = H;
  for (EdgeId e : del) {
    if (!H.has_edge(e) || H.edge(e).color != Color::blue) return false;
    auto it = run.sampling.chosen_by.find(e);
    if (it == run.sampling.chosen_by.end() || it->second.empty()) return false;
    for (VertexId v : it->second) {
      if (!H.edge(e).touches(v)) return false;
    }
    expect.remove_edge(e);
  }
  return expect == Hstar;
}

}  // namespace

Certificate compute(const Graph& host, const Run& run, const Graph& Hstar, const TopoWitness& witness) {
  Certificate c;
  const pipeline::Config& cfg = run.config;
  const Graph& H = run.state.H;
  const int h = cfg.h;
  c.degree = run.degree;
  c.config = cfg;
  c.nominal = pipeline::nominal_values(cfg);

  c.vertices_H = static_cast<long long>(H.num_vertices());
  c.edges_H = static_cast<long long>(H.num_edges());
  c.vertices_Hstar = static_cast<long long>(Hstar.num_vertices());
  c.edges_Hstar = static_cast<long long>(Hstar.num_edges());
  c.size_bound = 10 * pow4(h) * cfg.r;
  c.cluster_bound = 10 * pow4(h);
  c.cluster_sizes.assign(std::max(cfg.r, 0), 0);
  bool cluster_map_ok = run.state.cluster_of.size() == H.num_vertices();
  for (const auto& [v, j] : run.state.cluster_of) {
    if (!H.has_vertex(v) || j < 0 || j >= cfg.r) {
      cluster_map_ok = false;
      continue;
    }
    ++c.cluster_sizes[j];
  }
  long long total = 0;
  bool per_cluster = true;
  for (long long s : c.cluster_sizes) {
    total += s;
    per_cluster = per_cluster && s <= c.cluster_bound;
  }
  c.size_ok = cluster_map_ok && per_cluster && c.vertices_Hstar <= c.size_bound && c.vertices_Hstar <= total;

  c.max_degree_H = static_cast<int>(H.max_degree());
  c.max_degree_Hstar = static_cast<int>(Hstar.max_degree());
  c.degree_ok = degree_ledger(H) && c.max_degree_Hstar <= run.degree;
  c.red_cover_ok = covers(run);
  c.A_in_Hstar = static_cast<int>(run.state.A.size()) == h &&
                 std::all_of(run.state.A.begin(), run.state.A.end(),
                             [&](VertexId a) { return Hstar.has_vertex(a); });
  c.sampling_log_ok = sampling_log(run, Hstar);

  const Verdict tv = verify_topo_witness(host, Hstar, witness);
  c.topo_ok = tv.ok();
  c.topo_clause = tv.ok() ? "" : tv.violations.front().clause;

  const std::size_t expected = run.degree == 3 ? static_cast<std::size_t>(cfg.N) : 1;
  c.congestion_ok = run.expanders.size() == expected;
  for (const pipeline::ExpanderRun& e : run.expanders) {
    ExpanderStats s;
    const cmg::Embedding& emb = e.embedding;
    s.kappa = emb.x.n;
    s.rounds = static_cast<int>(e.transcript.size());
    s.embedding_ok = emb.x.n == h && verify_embedding(H, emb).ok();
    try {
      s.replay_ok = cmg::replay(emb.x.n, e.transcript) == emb.x;
    } catch (const Error&) {
      s.replay_ok = false;
    }
    const cmg::EmbeddingStats st = cmg::embedding_stats(emb);
    s.eta = st.eta;
    s.delta_prime = st.delta_prime;
    const cmg::ExpansionResult ex = cmg::expansion(emb.x, cfg.budget);
    s.alpha = ex.value;
    s.alpha_exact = ex.exact;
    s.product = cmg::tw_product(s.kappa, s.alpha, s.eta, c.max_degree_H, s.delta_prime);
    c.congestion_ok = c.congestion_ok && s.eta <= 2;
    c.tw_product = std::max(c.tw_product, s.product);
    c.expanders.push_back(s);
  }

  try {
    c.segments_ok =
        run.segments == pipeline::segment_red_paths(run.state.horizontal, run.state.cluster_of, cfg.theta);
    const pipeline::Contracted k = pipeline::contract_segments(run.state, run.segments, Hstar);
    c.supernodes = k.F.n;
    c.F_edges = static_cast<long long>(k.F.edges.size());
    const pipeline::MinCutVerdict mc = pipeline::verify_min_cut_F(k.F, cfg.N);
    c.F_min_cut = mc.value;
    c.F_min_cut_ok = mc.holds;

    c.lift_ok = true;
    Rng rng(cfg.seed ^ 0x6c696674ULL);
    for (int i = 0; i < 100 && k.F.n > 0; ++i) {
      std::set<int> side;
      for (int v = 0; v < k.F.n; ++v) {
        if (rng.below(2)) side.insert(v);
      }
      if (pipeline::out_degree(k.F, side) != boundary_size(H, pipeline::lift(k, side))) c.lift_ok = false;
    }

    const pipeline::PreservationReport pr = pipeline::verify_sampling_preservation(k.F, k.Fstar, 32.0, 2000, cfg.seed);
    c.preservation_worst = pr.worst_ratio;
    c.preservation_cuts = pr.cuts_tested;
    c.preservation_violations = pr.violations;
    c.preservation_exhaustive = pr.exhaustive;

    const pipeline::WellLinkedness wu = pipeline::measure_well_linkedness(k.Fstar, k.U, cfg.budget);
    c.wl_U_Fstar = wu.alpha;
    c.wl_U_Fstar_exact = wu.exact;
  } catch (const Error&) {
    c.segments_ok = false;
  }
  c.deleted_edges = static_cast<long long>(run.sampling.deleted.size());

  if (c.A_in_Hstar) {
    std::map<VertexId, int> idx;
    const pipeline::Multigraph mh = pipeline::to_multigraph(H, &idx);
    std::vector<int> terms;
    bool present = true;
    for (VertexId a : run.state.A) {
      auto it = idx.find(a);
      if (it == idx.end()) {
        present = false;
        break;
      }
      terms.push_back(it->second);
    }
    if (present) {
      const pipeline::WellLinkedness wa = pipeline::measure_well_linkedness(mh, terms, cfg.budget);
      c.wl_A_H = wa.alpha;
      c.wl_A_H_exact = wa.exact;
    }
  }

  if (host.num_vertices() <= 25 && Hstar.num_vertices() <= 32) {
    c.tw_checked = true;
    c.tw_Hstar = exact_treewidth(Hstar);
    c.tw_host = exact_treewidth(host);
    c.tw_ordering_ok = c.tw_product <= c.tw_Hstar && c.tw_Hstar <= c.tw_host;
  }

  c.hstar_hash = content_hash(json(Hstar));
  bool expanders_ok = true;
  for (const ExpanderStats& s : c.expanders) expanders_ok = expanders_ok && s.embedding_ok && s.replay_ok;
  c.ok = c.size_ok && c.degree_ok && c.red_cover_ok && c.A_in_Hstar && c.sampling_log_ok && c.topo_ok &&
         expanders_ok && c.congestion_ok && c.segments_ok && c.lift_ok && c.tw_ordering_ok;
  return c;
}

Check certify(const Graph& host, const Run& run, const Graph& Hstar, const TopoWitness& witness,
              const json& claimed) {
  Check out;
  out.recomputed = compute(host, run, Hstar, witness);
  const json fresh = out.recomputed;
  if (!claimed.is_object()) {
    out.mismatches.push_back("certificate");
    return out;
  }
  for (const auto& [key, value] : fresh.items()) {
    if (!claimed.contains(key) || claimed.at(key) != value) out.mismatches.push_back(key);
  }
  for (const auto& [key, value] : claimed.items()) {
    if (!fresh.contains(key)) out.mismatches.push_back(key);
  }
  out.ok = out.mismatches.empty() && out.recomputed.ok;
  return out;
}

}  // namespace twsparse::cert
