#pragma once

#include <string>
#include <vector>

#include "twsparse/json_io.hpp"
#include "twsparse/pipeline.hpp"

namespace twsparse::cert {

struct ExpanderStats {
  int kappa = 0;
  int rounds = 0;
  int delta_prime = 0;
  int eta = 0;
  double alpha = 0.0;
  bool alpha_exact = true;
  double product = 0.0;
  bool embedding_ok = false;
  bool replay_ok = false;
};

struct Certificate {
  int version = kFormatVersion;
  int degree = 3;
  pipeline::Config config;
  pipeline::NominalValues nominal;

  long long vertices_H = 0, edges_H = 0;
  long long vertices_Hstar = 0, edges_Hstar = 0;
  long long size_bound = 0;     // 10 h^4 r
  long long cluster_bound = 0;  // 10 h^4
  std::vector<long long> cluster_sizes;
  bool size_ok = false;

  int max_degree_H = 0;
  int max_degree_Hstar = 0;
  bool degree_ok = false;
  bool red_cover_ok = false;
  bool A_in_Hstar = false;
  bool sampling_log_ok = false;
  bool topo_ok = false;
  std::string topo_clause;

  std::vector<ExpanderStats> expanders;
  bool congestion_ok = false;

  bool segments_ok = false;
  long long supernodes = 0;
  long long F_edges = 0;
  long long F_min_cut = 0;
  bool F_min_cut_ok = false;
  bool lift_ok = false;

  long long deleted_edges = 0;
  double preservation_worst = 1.0;
  long long preservation_cuts = 0;
  long long preservation_violations = 0;
  bool preservation_exhaustive = true;

  double wl_A_H = 0.0;
  bool wl_A_H_exact = true;
  double wl_U_Fstar = 0.0;
  bool wl_U_Fstar_exact = true;

  double tw_product = 0.0;
  bool tw_checked = false;
  int tw_Hstar = -1;
  int tw_host = -1;
  bool tw_ordering_ok = true;

  std::string hstar_hash;
  bool ok = false;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ExpanderStats, kappa, rounds, delta_prime, eta, alpha, alpha_exact,
                                   product, embedding_ok, replay_ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Certificate, version, degree, config, nominal, vertices_H, edges_H,
                                   vertices_Hstar, edges_Hstar, size_bound, cluster_bound, cluster_sizes,
                                   size_ok, max_degree_H, max_degree_Hstar, degree_ok, red_cover_ok,
                                   A_in_Hstar, sampling_log_ok, topo_ok, topo_clause, expanders,
                                   congestion_ok, segments_ok, supernodes, F_edges, F_min_cut,
                                   F_min_cut_ok, lift_ok, deleted_edges, preservation_worst,
                                   preservation_cuts, preservation_violations, preservation_exhaustive,
                                   wl_A_H, wl_A_H_exact, wl_U_Fstar, wl_U_Fstar_exact, tw_product,
                                   tw_checked, tw_Hstar, tw_host, tw_ordering_ok, hstar_hash, ok)

/// Witness of H* in the host: the witness of H restricted to surviving edges.
TopoWitness sparsifier_witness(const pipeline::Run& run);

/// Recomputes every field from the host, the stored evidence, H* and its
/// witness. Tampered inputs show up as failed flags, never as exceptions.
Certificate compute(const Graph& host, const pipeline::Run& run, const Graph& Hstar,
                    const TopoWitness& witness);

struct Check {
  bool ok = false;
  std::vector<std::string> mismatches;  // certificate fields that differ
  Certificate recomputed;
};

Check certify(const Graph& host, const pipeline::Run& run, const Graph& Hstar,
              const TopoWitness& witness, const json& claimed);

}  // namespace twsparse::cert
