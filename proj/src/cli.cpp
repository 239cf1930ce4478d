#include "twsparse/cli.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include "twsparse/certificate.hpp"
#include "twsparse/json_io.hpp"
#include "twsparse/two_pair.hpp"

namespace twsparse {

namespace {

namespace fs = std::filesystem;

void setup_logging() {
  auto logger = spdlog::get("twsparse");
  if (!logger) {
    logger = spdlog::stderr_color_mt("twsparse");
    spdlog::set_default_logger(logger);
  }
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("TWSPARSE_LOG")) level = spdlog::level::from_str(env);
  spdlog::set_level(level);
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw NotFoundError("cannot create directory " + dir);
}

pos::System read_system(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return j.get<pos::System>();
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  } catch (const ArgumentError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

json report_json(const pos::Report& r) {
  json clauses = json::array();
  for (const pos::Clause& c : r.clauses) {
    clauses.push_back({{"clause", c.name}, {"holds", c.holds}, {"exact", c.exact}, {"detail", c.detail}});
  }
  return {{"ok", r.ok()}, {"exact", r.exact()}, {"clauses", std::move(clauses)}};
}

json verdict_json(const Verdict& v) {
  json out = json::array();
  for (const Violation& x : v.violations) out.push_back({{"clause", x.clause}, {"detail", x.detail}});
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  Graph g;
  g.add_vertex(0);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<VertexId>(rng.below(v)), v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < p && !g.find_any_edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

struct Options {
  std::string out;
  int h = 0;
  int r = 0;
  int n = 0;
  double p = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1u << 20;
  std::string graph, s1, t1, s2, t2;
  std::string system;
  int rstar = 0;
  int n_expanders = 0;
  int theta = 12;
  int degree = 3;
  std::string host, sparsifier, witness, certificate;
};

int cmd_generate_grid(const Options& o, std::ostream& out) {
  const pos::System s = pos::generate_from_grid(o.h, o.r);
  json report;
  if (o.h <= 4) {
    const pos::Report rep = pos::validate(s, o.budget, o.seed);
    if (!rep.ok()) {
      out << report_json(rep).dump(2) << '\n';
      return kInvariant;
    }
  }
  ensure_dir(o.out);
  write_json_file(o.out + "/host.json", json(s.host));
  write_json_file(o.out + "/system.json", json(s));
  return kOk;
}

int cmd_generate_random(const Options& o) {
  ensure_dir(o.out);
  write_json_file(o.out + "/host.json", json(random_graph(o.n, o.p, o.seed)));
  return kOk;
}

int cmd_route2(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph);
  const auto S1 = read_vertex_list(o.s1);
  const auto T1 = read_vertex_list(o.t1);
  const auto S2 = read_vertex_list(o.s2);
  const auto T2 = read_vertex_list(o.t2);
  const two_pair::TwoPairResult tp = two_pair::route_two_pairs(g, S1, T1, S2, T2);
  const two_pair::GoodMinor& m = tp.minor;
  const Verdict good = two_pair::verify_good_minor(tp.instance, m);
  const bool minimal = std::all_of(m.certificate.begin(), m.certificate.end(),
                                   [](const two_pair::MinimalityEntry& e) { return e.holds(); });
  const two_pair::ChainSystem cs = two_pair::build_chains(m);
  const Verdict chains = two_pair::verify_chain_properties(m, cs);
  Verdict paths;
  for (const PathSet* ps : {&tp.red, &tp.blue}) {
    for (const Violation& v : verify_path_set(g, *ps).violations) paths.add(v.clause, v.detail);
  }
  const Graph un = two_pair::path_union(g, tp.red, tp.blue);
  const int k = tp.instance.k1;
  const bool size_ok = static_cast<long long>(m.minor.num_vertices()) <= two_pair::minor_size_bound(k);
  const bool tau_ok = static_cast<long long>(tau(un)) <= two_pair::lifted_tau_bound(k);
  const bool ok = good.ok() && minimal && chains.ok() && paths.ok() && size_ok && tau_ok;
  json report = {
      {"red", tp.red},
      {"blue", tp.blue},
      {"swapped", tp.swapped},
      {"minor", {{"graph", m.minor}, {"model", m.model}, {"red", m.red}, {"blue", m.blue}}},
      {"tau",
       {{"minor", tau(m.minor)},
        {"union", tau(un)},
        {"minor_vertices", m.minor.num_vertices()},
        {"minor_bound", two_pair::minor_size_bound(k)},
        {"union_bound", two_pair::lifted_tau_bound(k)}}},
      {"verdicts",
       {{"good_minor", verdict_json(good)},
        {"minimal", minimal},
        {"chains", verdict_json(chains)},
        {"paths", verdict_json(paths)}}},
      {"ok", ok}};
  emit(report, o.out, out);
  return ok ? kOk : kInvariant;
}

int cmd_sparsify(const Options& o, std::ostream& out) {
  pos::System s;
  if (!o.system.empty()) {
    s = read_system(o.system);
  } else {
    if (o.h == 0 || o.r == 0) throw ArgumentError("sparsify needs --system or both --h and --r");
    s = pos::generate_from_grid(o.h, o.r);
  }
  pipeline::Config c;
  c.h = s.h();
  c.r = s.r();
  c.N = o.n_expanders > 0 ? o.n_expanders : (o.rstar > 0 ? c.r / o.rstar : 1);
  c.rstar = o.rstar > 0 ? o.rstar : c.r / std::max(c.N, 1);
  c.theta = o.theta;
  c.seed = o.seed;
  c.budget = o.budget;
  if (o.degree != 3 && o.degree != 4) throw ArgumentError("--degree must be 3 or 4");
  const pipeline::Run run = o.degree == 3 ? pipeline::build_degree3(s, c) : pipeline::build_degree4(s, c);
  const TopoWitness w = cert::sparsifier_witness(run);
  const cert::Certificate cf = cert::compute(s.host, run, run.sampling.Hstar, w);
  ensure_dir(o.out);
  write_json_file(o.out + "/sparsifier.json", json(run.sampling.Hstar));
  write_json_file(o.out + "/witness.json", json(w));
  write_json_file(o.out + "/certificate.json",
                  {{"certificate", cf}, {"evidence", pipeline::evidence_to_json(run)}});
  out << json{{"ok", cf.ok}, {"hash", cf.hstar_hash}, {"vertices", cf.vertices_Hstar},
              {"max_degree", cf.max_degree_Hstar}}
             .dump()
      << '\n';
  return cf.ok ? kOk : kInvariant;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const json hj = read_json_file(o.host);
  const json sj = read_json_file(o.sparsifier);
  const json wj = read_json_file(o.witness);
  const json cj = read_json_file(o.certificate);
  Graph host, Hstar;
  TopoWitness w;
  pipeline::Run run;
  json claimed;
  try {
    host = hj.contains("clusters") ? hj.get<pos::System>().host : hj.get<Graph>();
    Hstar = sj.get<Graph>();
    w = wj.get<TopoWitness>();
    run = pipeline::evidence_from_json(cj.at("evidence"));
    claimed = cj.at("certificate");
  } catch (const json::exception& e) {
    throw ParseError(std::string("certify: ") + e.what(), 0);
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("certify: ") + e.what(), 0);
  }
  run.sampling.Hstar = Hstar;
  const cert::Check chk = cert::certify(host, run, Hstar, w, claimed);
  json failed = json::array();
  const json fresh = chk.recomputed;
  for (const auto& [key, value] : fresh.items()) {
    if (value.is_boolean() && !value.get<bool>() && key != "F_min_cut_ok") failed.push_back(key);
  }
  emit({{"ok", chk.ok}, {"mismatches", chk.mismatches}, {"failed", failed}}, o.out, out);
  return chk.ok ? kOk : kInvariant;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const pos::Report rep = pos::validate(read_system(o.system), o.budget, o.seed);
  emit(report_json(rep), o.out, out);
  return rep.ok() ? kOk : kInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  setup_logging();
  CLI::App app{"treewidth sparsifier toolkit", "twsparse"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "write a host graph or path-of-sets system");
  gen->set_help_flag("--help", "print help");
  gen->require_subcommand(1);
  auto* grid = gen->add_subcommand("grid-pos", "grid path-of-sets system");
  grid->set_help_flag("--help", "print help");
  grid->add_option("--h", o.h, "interface size")->required();
  grid->add_option("--r", o.r, "number of clusters")->required();
  grid->add_option("--out", o.out, "output directory")->required();
  grid->add_option("--budget", o.budget);
  auto* rnd = gen->add_subcommand("random-graph", "random connected graph");
  rnd->set_help_flag("--help", "print help");
  rnd->add_option("--n", o.n, "vertices")->required();
  rnd->add_option("--p", o.p, "extra edge probability");
  rnd->add_option("--seed", o.seed)->required();
  rnd->add_option("--out", o.out, "output directory")->required();

  auto* route2 = app.add_subcommand("route2", "route two pairs with a small union");
  route2->set_help_flag("--help", "print help");
  route2->add_option("--graph", o.graph)->required();
  route2->add_option("--s1", o.s1)->required();
  route2->add_option("--t1", o.t1)->required();
  route2->add_option("--s2", o.s2)->required();
  route2->add_option("--t2", o.t2)->required();
  route2->add_option("--out", o.out, "report file (default stdout)");

  auto* sparsify = app.add_subcommand("sparsify", "build the sparsifier and its certificate");
  sparsify->set_help_flag("--help", "print help");
  sparsify->add_option("--system", o.system);
  sparsify->add_option("--h", o.h);
  sparsify->add_option("--r", o.r);
  sparsify->add_option("--rstar", o.rstar);
  sparsify->add_option("--n-expanders", o.n_expanders);
  sparsify->add_option("--theta", o.theta);
  sparsify->add_option("--degree", o.degree)->check(CLI::IsMember({3, 4}));
  sparsify->add_option("--seed", o.seed)->required();
  sparsify->add_option("--budget", o.budget);
  sparsify->add_option("--out", o.out, "output directory")->required();

  auto* certify = app.add_subcommand("certify", "recompute a certificate from its witnesses");
  certify->set_help_flag("--help", "print help");
  certify->add_option("--host", o.host)->required();
  certify->add_option("--sparsifier", o.sparsifier)->required();
  certify->add_option("--witness", o.witness)->required();
  certify->add_option("--certificate", o.certificate)->required();
  certify->add_option("--out", o.out, "report file (default stdout)");

  auto* validate = app.add_subcommand("validate", "check a path-of-sets system");
  validate->set_help_flag("--help", "print help");
  validate->add_option("--system", o.system)->required();
  validate->add_option("--budget", o.budget);
  validate->add_option("--seed", o.seed);
  validate->add_option("--out", o.out);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kIo;
  }

  try {
    if (grid->parsed()) return cmd_generate_grid(o, out);
    if (rnd->parsed()) return cmd_generate_random(o);
    if (route2->parsed()) return cmd_route2(o, out);
    if (sparsify->parsed()) return cmd_sparsify(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (validate->parsed()) return cmd_validate(o, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    out << json{{"error", e.what()}, {"cut", e.cut()}}.dump() << '\n';
    return kInfeasible;
  } catch (const NotFoundError& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "format error: " << e.what() << '\n';
    return kIo;
  } catch (const VersionError& e) {
    err << "version error: " << e.what() << '\n';
    return kIo;
  } catch (const ArgumentError& e) {
    err << "bad argument: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  }
  return kIo;
}

}  // namespace twsparse
