#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "twsparse/certificate.hpp"
#include "twsparse/json_io.hpp"
#include "twsparse/pipeline.hpp"

using namespace twsparse;
using namespace twsparse::pipeline;

namespace {

Config config(int h, int r, int N, std::uint64_t seed) {
  Config c;
  c.h = h;
  c.r = r;
  c.N = N;
  c.rstar = r / N;
  c.seed = seed;
  return c;
}

// Load on every host edge recounted from the stored paths and subgraphs.
int recount_congestion(const cmg::Embedding& emb) {
  std::map<EdgeId, int> load;
  for (const Path& p : emb.edge_paths) {
    for (EdgeId e : p.edges) ++load[e];
  }
  for (const auto& es : emb.vertex_edges) {
    for (EdgeId e : es) ++load[e];
  }
  int worst = 0;
  for (const auto& [e, l] : load) worst = std::max(worst, l);
  return worst;
}

int blue_degree(const Graph& g, VertexId v) {
  int b = 0;
  for (EdgeId e : g.incident(v)) b += g.edge(e).color == Color::blue;
  return b;
}

}  // namespace

TEST_CASE("config checks and formula values") {
  CHECK_NOTHROW(config(2, 4, 2, 0).check());
  CHECK_THROWS_AS(config(3, 4, 2, 0).check(), ArgumentError);
  Config bad = config(2, 4, 2, 0);
  bad.rstar = 3;
  CHECK_THROWS_AS(bad.check(), ArgumentError);

  const Config c = config(4, 6, 3, 0);
  const NominalValues p = nominal_values(c);
  CHECK(p.N == static_cast<long long>(std::ceil(3072.0 * std::log2(10.0 * 256 * c.rstar))));
  CHECK(p.theta == doctest::Approx(200.0 * std::pow(static_cast<double>(c.N), 4)));
  CHECK(p.rstar == cmg::default_rounds(4));
}

TEST_CASE("one cluster of a h=2 grid") {
  const pos::System s = pos::generate_from_grid(2, 1);
  const auto& A = s.A[0];
  const auto& B = s.B[0];
  for (int flip = 0; flip < 2; ++flip) {
    const std::map<VertexId, int> f{{A[0], flip}, {A[1], 1 - flip}};
    const ClusterRouting c = cluster_iteration(s.host, s.clusters[0], A, B, cmg::Partition{{0}, {1}}, f);
    CHECK(c.H.num_vertices() <= 160);
    CHECK(c.H.max_degree() <= 4);
    for (VertexId a : A) CHECK(c.H.degree(a) <= 2);
    for (VertexId b : B) CHECK(c.H.degree(b) <= 3);
    REQUIRE(c.matching.size() == 1);
    CHECK(c.matching[0] == std::pair<int, int>{0, 1});
    CHECK(verify_topo_witness(s.host, c.H, c.witness).ok());
    CHECK(cluster_minimality_violations(c).empty());
  }
}

TEST_CASE("every cluster of a h=4 run is minimal") {
  const pos::System s = pos::generate_from_grid(4, 4);
  const Run run = build_degree4(s, config(4, 4, 1, 3));
  REQUIRE(run.state.clusters.size() == 4);
  for (const ClusterRouting& c : run.state.clusters) {
    CHECK(cluster_minimality_violations(c).empty());
    for (const auto& [id, e] : c.H.edges()) {
      const Graph d = delete_edge(c.H, id);
      const bool both = route_node_disjoint(d, c.A, c.B).ok() && route_node_disjoint(d, c.A1, c.A2).ok();
      CHECK_FALSE(both);
    }
    for (VertexId v : c.H.vertices()) {
      if (c.H.degree(v) == 4) CHECK(blue_degree(c.H, v) == 2);
    }
  }
}

TEST_CASE("degree-4 construction on grid(2,2)") {
  const pos::System s = pos::generate_from_grid(2, 2);
  const Run run = build_degree4(s, config(2, 2, 1, 5));
  CHECK(run.state.H.max_degree() <= 4);
  CHECK(run.sampling.deleted.empty());
  REQUIRE(run.expanders.size() == 1);
  const ExpanderRun& e = run.expanders[0];
  CHECK(e.transcript.size() == 2);
  CHECK(recount_congestion(e.embedding) <= 2);
  CHECK(cmg::replay(2, e.transcript) == e.embedding.x);
  CHECK(cmg::verify_embedding(run.state.H, e.embedding).ok());
  // Expander vertex v lives on horizontal path v in every cluster.
  for (int v = 0; v < 2; ++v) {
    const auto& hp = run.state.horizontal[v].vertices;
    const std::set<VertexId> on(hp.begin(), hp.end());
    for (VertexId x : e.embedding.vertex_sets[v]) CHECK(on.count(x));
    CHECK(on.count(run.state.A[v]));
  }
  CHECK(verify_topo_witness(s.host, run.state.H, run.state.witness).ok());
}

TEST_CASE("degree-3 construction on grid(2,4) with two expanders") {
  const pos::System s = pos::generate_from_grid(2, 4);
  const Run run = build_degree3(s, config(2, 4, 2, 11));
  const Graph& Hs = run.sampling.Hstar;
  CHECK(Hs.max_degree() <= 3);
  for (VertexId a : run.state.A) CHECK(Hs.has_vertex(a));
  CHECK(static_cast<long long>(Hs.num_vertices()) <= 10LL * 16 * 4);
  CHECK(verify_topo_witness(s.host, Hs, cert::sparsifier_witness(run)).ok());
  REQUIRE(run.expanders.size() == 2);
  for (const ExpanderRun& e : run.expanders) CHECK(recount_congestion(e.embedding) <= 2);
}

TEST_CASE("blue-edge sampling") {
  SUBCASE("two blue leaves keep exactly one") {
    Graph g;
    g.add_edge(0, 1, Color::blue);
    g.add_edge(0, 2, Color::blue);
    g.add_edge(0, 3, Color::red);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const Sampling s = sample_blue_edges(g, rng);
      CHECK(s.deleted.size() == 1);
      CHECK(s.Hstar.num_edges() == 2);
      CHECK(blue_degree(s.Hstar, 0) == 1);
    }
  }
  SUBCASE("nothing to choose leaves H unchanged") {
    Graph g = make_cycle_graph(5);
    g.set_color(0, Color::blue);
    g.set_color(2, Color::blue);
    Rng rng(1);
    CHECK(sample_blue_edges(g, rng).Hstar == g);
  }
  SUBCASE("degree-4 vertex without two blue edges is rejected") {
    Graph g = make_star_graph(4);
    Rng rng(1);
    CHECK_THROWS_AS(sample_blue_edges(g, rng), InvariantError);
  }
  SUBCASE("every blue edge survives at least a quarter of the time") {
    const Run run = build_degree4(pos::generate_from_grid(2, 4), config(2, 4, 1, 2));
    const Graph& H = run.state.H;
    const int trials = 2000;
    std::map<EdgeId, int> kept;
    for (int t = 0; t < trials; ++t) {
      Rng rng(1000 + t);
      const Sampling s = sample_blue_edges(H, rng);
      for (const auto& [id, e] : H.edges()) kept[id] += s.Hstar.has_edge(id);
    }
    int blue = 0;
    for (const auto& [id, e] : H.edges()) {
      if (e.color != Color::blue) continue;
      ++blue;
      const double sigma = std::sqrt(0.25 * 0.75 / trials);
      CHECK(static_cast<double>(kept[id]) / trials >= 0.25 - 3 * sigma);
    }
    CHECK(blue > 0);
  }
}

TEST_CASE("red path segmentation") {
  Path p;
  std::map<VertexId, int> cluster;
  for (int v = 0; v < 8; ++v) {
    p.vertices.push_back(v);
    cluster[v] = v / 4;
  }
  SUBCASE("light path is one segment") {
    const Segmentation s = segment_red_paths({p}, cluster, 5);
    CHECK(s[0].size() == 1);
  }
  SUBCASE("exactly two theta in one cluster gives two segments") {
    std::map<VertexId, int> one;
    for (int v = 0; v < 8; ++v) one[v] = 0;
    const Segmentation s = segment_red_paths({p}, one, 4);
    REQUIRE(s[0].size() == 2);
    CHECK(s[0][0] == std::vector<VertexId>{0, 1, 2, 3});
  }
  SUBCASE("segments partition the path contiguously") {
    const Segmentation s = segment_red_paths({p}, cluster, 2);
    std::vector<VertexId> joined;
    for (const auto& run : s[0]) joined.insert(joined.end(), run.begin(), run.end());
    CHECK(joined == p.vertices);
  }
  CHECK_THROWS_AS(segment_red_paths({p}, cluster, 0), ArgumentError);
}

TEST_CASE("contracting segments") {
  const pos::System sys = pos::generate_from_grid(2, 4);
  const Run run = build_degree3(sys, config(2, 4, 2, 4));
  const State& st = run.state;

  Segmentation single;
  for (const Path& p : st.horizontal) {
    std::vector<std::vector<VertexId>> runs;
    for (VertexId v : p.vertices) runs.push_back({v});
    single.push_back(runs);
  }
  const Contracted same = contract_segments(st, single, st.H);
  CHECK(same.F.n == static_cast<int>(st.H.num_vertices()));
  CHECK(same.F.edges.size() == st.H.num_edges());

  Segmentation whole;
  for (const Path& p : st.horizontal) whole.push_back({p.vertices});
  const Contracted coarse = contract_segments(st, whole, run.sampling.Hstar);
  CHECK(coarse.F.n == 2);
  CHECK(coarse.U.size() == 2);

  const Contracted k = contract_segments(st, run.segments, run.sampling.Hstar);
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    std::set<int> side;
    for (int v = 0; v < k.F.n; ++v) {
      if (rng.below(2)) side.insert(v);
    }
    CHECK(out_degree(k.F, side) == boundary_size(st.H, lift(k, side)));
  }
  CHECK_THROWS_AS(contract_segments(st, Segmentation{}, st.H), Error);
}

TEST_CASE("min cut of F") {
  Multigraph cyc{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {}};
  const MinCutVerdict c = verify_min_cut_F(cyc, 2);
  CHECK(c.value == 2);
  CHECK(c.value == oracle::min_cut(cyc.n, cyc.edges));
  CHECK(c.holds);
  Multigraph split{4, {{0, 1}, {2, 3}}, {}};
  const MinCutVerdict d = verify_min_cut_F(split, 1);
  CHECK(d.value == 0);
  CHECK_FALSE(d.holds);
  CHECK_FALSE(d.side.empty());
}

TEST_CASE("sampling preservation") {
  Multigraph F{3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}, {}};
  const PreservationReport same = verify_sampling_preservation(F, F);
  CHECK(same.worst_ratio == doctest::Approx(1.0));
  CHECK(same.violations == 0);
  CHECK(same.exhaustive);

  Multigraph dense{2, {}, {}};
  for (int i = 0; i < 40; ++i) dense.edges.emplace_back(0, 1);
  const Multigraph gone{2, {}, {}};
  const PreservationReport bad = verify_sampling_preservation(dense, gone);
  CHECK(bad.violations > 0);
  CHECK(bad.worst_ratio == 0.0);
}

TEST_CASE("measured well-linkedness") {
  const Multigraph p4{4, {{0, 1}, {1, 2}, {2, 3}}, {}};
  CHECK(measure_well_linkedness(p4, {0, 3}).alpha == doctest::Approx(1.0));
  const Multigraph k4 = to_multigraph(make_complete_graph(4));
  CHECK(measure_well_linkedness(k4, {0, 1, 2, 3}).alpha == doctest::Approx(2.0));
  const WellLinkedness w = measure_well_linkedness(k4, {0, 1, 2, 3}, 1);
  CHECK_FALSE(w.exact);
}

TEST_CASE("runs are deterministic in the seed") {
  const pos::System s = pos::generate_from_grid(2, 4);
  const Run a = build_degree3(s, config(2, 4, 2, 21));
  const Run b = build_degree3(s, config(2, 4, 2, 21));
  CHECK(evidence_to_json(a).dump() == evidence_to_json(b).dump());
  CHECK(json(a.sampling.Hstar).dump() == json(b.sampling.Hstar).dump());
}

TEST_CASE("certificate recomputation") {
  const pos::System s = pos::generate_from_grid(2, 2);
  const Run run = build_degree3(s, config(2, 2, 1, 6));
  const TopoWitness w = cert::sparsifier_witness(run);
  const cert::Certificate c = cert::compute(s.host, run, run.sampling.Hstar, w);
  CHECK(c.ok);
  CHECK(c.topo_ok);
  CHECK(c.tw_checked);
  CHECK(c.tw_Hstar == oracle::treewidth(run.sampling.Hstar));
  CHECK(c.tw_product <= c.tw_Hstar);
  CHECK(c.tw_Hstar <= c.tw_host);

  const cert::Check good = cert::certify(s.host, run, run.sampling.Hstar, w, json(c));
  CHECK(good.ok);
  CHECK(good.mismatches.empty());

  TopoWitness tampered = w;
  Path& p = tampered.edge_paths.begin()->second;
  p.vertices.back() = p.vertices.front();
  const cert::Check bad = cert::certify(s.host, run, run.sampling.Hstar, tampered, json(c));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.recomputed.topo_ok);

  json claimed = c;
  claimed["edges_Hstar"] = c.edges_Hstar + 1;
  const cert::Check lie = cert::certify(s.host, run, run.sampling.Hstar, w, claimed);
  CHECK_FALSE(lie.ok);
  CHECK(lie.mismatches == std::vector<std::string>{"edges_Hstar"});

  const Run back = evidence_from_json(evidence_to_json(run));
  CHECK(json(cert::compute(s.host, back, run.sampling.Hstar, w)) == json(c));
}
