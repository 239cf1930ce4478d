// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional argv[1] is the path of the twsparse executable, used to
// rerun commands in fresh processes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "twsparse/certificate.hpp"
#include "twsparse/cli.hpp"
#include "twsparse/cut_matching.hpp"
#include "twsparse/json_io.hpp"
#include "twsparse/pipeline.hpp"

using namespace twsparse;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct TwoPairCase {
  inst::TwoPair t;
  two_pair::TwoPairResult r;
};

std::vector<TwoPairCase> g_cases;
std::string g_binary;

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome criterion1() {
  Outcome o;
  Rng rng(20240601);
  int worst_minor = 0;
  long long worst_tau = 0;
  for (int i = 0; i < 240; ++i) {
    const int n = 10 + static_cast<int>(rng.below(51));
    const int k1 = 1 + static_cast<int>(rng.below(3));
    const int k2 = 1 + static_cast<int>(rng.below(3));
    TwoPairCase c{inst::random_two_pair(n, k1, k2, rng), {}};
    c.r = two_pair::route_two_pairs(c.t.g, c.t.S1, c.t.T1, c.t.S2, c.t.T2);
    const int k = std::max(k1, k2);
    const long long nv = static_cast<long long>(c.r.minor.minor.num_vertices());
    const long long t = static_cast<long long>(tau(two_pair::path_union(c.t.g, c.r.red, c.r.blue)));
    if (nv > 4LL * k * k * k * k + 4 * k) fail(o, "instance " + std::to_string(i) + ": |V(H)| = " + std::to_string(nv));
    if (t > 8LL * k * k * k * k + 8 * k) fail(o, "instance " + std::to_string(i) + ": tau = " + std::to_string(t));
    if (!verify_path_set(c.t.g, c.r.red).ok() || !verify_path_set(c.t.g, c.r.blue).ok() ||
        c.r.red.paths.size() != c.t.S1.size() || c.r.blue.paths.size() != c.t.S2.size()) {
      fail(o, "instance " + std::to_string(i) + ": lifted routing invalid");
    }
    worst_minor = std::max(worst_minor, static_cast<int>(nv));
    worst_tau = std::max(worst_tau, t);
    g_cases.push_back(std::move(c));
  }
  if (o.pass) {
    o.detail = std::to_string(g_cases.size()) + " instances, largest |V(H)| " + std::to_string(worst_minor) +
               ", largest tau " + std::to_string(worst_tau);
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < g_cases.size(); ++i) {
    const auto& c = g_cases[i];
    const auto bad = inst::minimality_faults(c.r.instance, c.r.minor.minor);
    if (!bad.empty()) fail(o, "instance " + std::to_string(i) + ": edge " + std::to_string(bad.front()) + " removable");
    for (const auto& e : two_pair::check_minimality(c.r.instance, c.r.minor.minor)) {
      if (!e.holds()) fail(o, "instance " + std::to_string(i) + ": library re-check disagrees");
    }
    edges += c.r.minor.minor.num_edges();
  }
  if (g_cases.empty()) fail(o, "no instances");
  if (o.pass) o.detail = std::to_string(edges) + " edges re-tested";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::size_t i = 0; i < g_cases.size(); ++i) {
    const auto& m = g_cases[i].r.minor;
    try {
      const two_pair::ChainSystem cs = two_pair::build_chains(m);
      for (const std::string& f : inst::chain_faults(m, cs)) fail(o, "instance " + std::to_string(i) + ": " + f);
      const Verdict v = two_pair::verify_chain_properties(m, cs);
      if (!v.ok()) fail(o, "instance " + std::to_string(i) + ": " + v.violations.front().clause);
    } catch (const Error& e) {
      fail(o, "instance " + std::to_string(i) + ": " + e.what());
    }
  }
  if (g_cases.empty()) fail(o, "no instances");
  if (o.pass) o.detail = std::to_string(g_cases.size()) + " minors, exhaustive cycle enumeration";
  return o;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(4);
  int routable = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng.below(7));
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    const double p = 0.15 + 0.5 * rng.unit();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.unit() < p) g.add_edge(u, v);
      }
    }
    const std::size_t k = 1 + rng.below(n / 2 + 1);
    const auto S = oracle::sample(g, std::min<std::size_t>(k, n), rng);
    const auto T = oracle::sample(g, S.size(), rng);
    const RouteResult r = route_node_disjoint(g, S, T);
    const bool expect = oracle::routable(g, S, T);
    routable += expect;
    if (r.ok() != expect) fail(o, "instance " + std::to_string(i) + " disagrees");
    if (r.ok() && !verify_path_set(g, *r.routing).ok()) fail(o, "instance " + std::to_string(i) + ": bad paths");
    if (!r.ok()) {
      Graph h = g;
      for (VertexId c : r.cut) h.remove_vertex(c);
      std::vector<VertexId> s2, t2;
      for (VertexId s : S) {
        if (h.has_vertex(s)) s2.push_back(s);
      }
      for (VertexId t : T) {
        if (h.has_vertex(t)) t2.push_back(t);
      }
      bool separated = r.cut.size() < S.size();
      for (VertexId s : s2) {
        for (VertexId t : t2) separated = separated && !oracle::routable(h, {s}, {t});
      }
      if (!separated) fail(o, "instance " + std::to_string(i) + ": cut witness does not separate");
    }
  }
  if (o.pass) o.detail = "500 instances, " + std::to_string(routable) + " routable";
  return o;
}

int congestion(const cmg::Embedding& emb) {
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

pipeline::Config config(int h, int r, int N, std::uint64_t seed) {
  pipeline::Config c;
  c.h = h;
  c.r = r;
  c.N = N;
  c.rstar = r / N;
  c.seed = seed;
  return c;
}

Outcome criterion5() {
  Outcome o;
  int runs = 0;
  for (int h : {2, 4}) {
    for (int r : {2, 4, 6}) {
      const pos::System s = pos::generate_from_grid(h, r);
      for (int N : {1, 2, 3}) {
        if (r % N != 0) continue;
        const std::string tag = "h=" + std::to_string(h) + " r=" + std::to_string(r) + " N=" + std::to_string(N);
        try {
          const pipeline::Run run = pipeline::build_degree3(s, config(h, r, N, 100 + runs));
          const Graph& Hs = run.sampling.Hstar;
          if (Hs.max_degree() > 3) fail(o, tag + ": degree " + std::to_string(Hs.max_degree()));
          for (VertexId a : run.state.A) {
            if (!Hs.has_vertex(a)) fail(o, tag + ": A not in H*");
          }
          if (static_cast<long long>(Hs.num_vertices()) > 10LL * h * h * h * h * r) fail(o, tag + ": too many vertices");
          const Verdict tv = verify_topo_witness(s.host, Hs, cert::sparsifier_witness(run));
          if (!tv.ok()) fail(o, tag + ": witness " + tv.violations.front().clause);
          if (static_cast<int>(run.expanders.size()) != N) fail(o, tag + ": expander count");
          for (const auto& e : run.expanders) {
            if (congestion(e.embedding) > 2) fail(o, tag + ": congestion " + std::to_string(congestion(e.embedding)));
            if (!cmg::verify_embedding(run.state.H, e.embedding).ok()) fail(o, tag + ": embedding invalid");
          }
        } catch (const Error& e) {
          fail(o, tag + ": " + e.what());
        }
        ++runs;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " configurations";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const pipeline::Run run = pipeline::build_degree4(pos::generate_from_grid(4, 4), config(4, 4, 1, 6));
  const Graph& H = run.state.H;
  const int trials = 10000;
  std::map<EdgeId, int> kept;
  for (int t = 0; t < trials; ++t) {
    Rng rng(static_cast<std::uint64_t>(t));
    const pipeline::Sampling s = pipeline::sample_blue_edges(H, rng);
    for (const auto& [id, e] : H.edges()) kept[id] += s.Hstar.has_edge(id);
  }
  const double sigma = std::sqrt(0.25 * 0.75 / trials);
  double lowest = 1.0;
  int blue = 0;
  for (const auto& [id, e] : H.edges()) {
    if (e.color != Color::blue) continue;
    ++blue;
    const double f = static_cast<double>(kept[id]) / trials;
    lowest = std::min(lowest, f);
    if (f < 0.25 - 3 * sigma) fail(o, "edge " + std::to_string(id) + " survives " + std::to_string(f));
  }
  if (blue == 0) fail(o, "no blue edges in H");
  if (o.pass) {
    std::ostringstream ss;
    ss << blue << " blue edges, lowest survival " << lowest << " (bound " << 0.25 - 3 * sigma << ")";
    o.detail = ss.str();
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream ss;
  for (int n : {8, 16}) {
    int good = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng game(seed);
      Rng pick(seed ^ 0xabcdefULL);
      const cmg::MatchingOracle oracle_player = [&pick](const cmg::Partition& p) {
        std::vector<int> z = p.Z;
        for (std::size_t i = z.size(); i > 1; --i) std::swap(z[i - 1], z[pick.below(i)]);
        cmg::Matching m;
        for (std::size_t i = 0; i < p.Y.size(); ++i) m.emplace_back(p.Y[i], z[i]);
        return m;
      };
      const cmg::GameResult g = cmg::run_game(n, cmg::default_rounds(n), oracle_player, game);
      good += oracle::expansion(n, g.x.edges) >= 0.3;
    }
    if (good < 9) fail(o, "N=" + std::to_string(n) + ": " + std::to_string(good) + "/10 seeds");
    ss << "N=" << n << ": " << good << "/10 ";
  }
  if (o.pass) o.detail = ss.str() + "seeds reach 0.3";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int checked = 0;
  for (int r : {2, 4}) {
    const pos::System s = pos::generate_from_grid(2, r);
    if (s.host.num_vertices() > 25) continue;
    const int host_tw = exact_treewidth(s.host);
    for (int N : {1, 2}) {
      if (r % N != 0) continue;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const pipeline::Run run = pipeline::build_degree3(s, config(2, r, N, seed));
        const Graph& Hs = run.sampling.Hstar;
        const cert::Certificate c = cert::compute(s.host, run, Hs, cert::sparsifier_witness(run));
        const int tw = exact_treewidth(Hs);
        const std::string tag = "r=" + std::to_string(r) + " N=" + std::to_string(N) + " seed " + std::to_string(seed);
        if (Hs.num_vertices() <= 8 && tw != oracle::treewidth(Hs)) fail(o, tag + ": treewidth oracle disagrees");
        if (tw > host_tw) fail(o, tag + ": tw(H*) > tw(host)");
        if (c.tw_product > tw + 1e-12) fail(o, tag + ": product exceeds tw(H*)");
        if (!c.tw_checked || c.tw_Hstar != tw || c.tw_host != host_tw || !c.tw_ordering_ok) {
          fail(o, tag + ": certificate disagrees");
        }
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " runs on hosts of at most 25 vertices";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every file under dir, keyed by relative path.
std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), dir).string()] = slurp(e.path());
  }
  return out;
}

using Command = std::function<std::vector<std::string>(const std::string& dir)>;

std::string run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::string run_subprocess(const std::vector<std::string>& args, const fs::path& dir) {
  std::string cmd = "\"" + g_binary + "\"";
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " > '" + (dir / "stdout.txt").string() + "' 2>/dev/null";
  const int code = std::system(cmd.c_str());
  return std::to_string(code);
}

Outcome criterion9() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "twsparse_acceptance_det";
  fs::remove_all(root);
  fs::create_directories(root / "in");
  const std::string in = (root / "in").string();
  {
    Rng rng(9);
    const inst::TwoPair t = inst::random_two_pair(30, 2, 2, rng);
    std::ofstream(in + "/g.json") << json(t.g).dump();
    std::ofstream(in + "/s1") << json(t.S1).dump();
    std::ofstream(in + "/t1") << json(t.T1).dump();
    std::ofstream(in + "/s2") << json(t.S2).dump();
    std::ofstream(in + "/t2") << json(t.T2).dump();
  }
  std::ostringstream sink;
  run_cli({"generate", "grid-pos", "--h", "2", "--r", "4", "--out", in}, sink, sink);
  run_cli({"sparsify", "--system", in + "/system.json", "--n-expanders", "2", "--seed", "4", "--out", in},
          sink, sink);

  const std::vector<std::pair<std::string, Command>> commands{
      {"generate grid-pos", [](const std::string& d) {
         return std::vector<std::string>{"generate", "grid-pos", "--h", "4", "--r", "3", "--out", d};
       }},
      {"generate random-graph", [](const std::string& d) {
         return std::vector<std::string>{"generate", "random-graph", "--n", "40", "--seed", "12", "--out", d};
       }},
      {"route2", [&](const std::string& d) {
         return std::vector<std::string>{"route2", "--graph", in + "/g.json", "--s1", in + "/s1", "--t1", in + "/t1",
                                         "--s2", in + "/s2", "--t2", in + "/t2", "--out", d + "/report.json"};
       }},
      {"sparsify degree 3", [&](const std::string& d) {
         return std::vector<std::string>{"sparsify", "--system", in + "/system.json", "--n-expanders", "2",
                                         "--seed", "17", "--out", d};
       }},
      {"sparsify degree 4", [](const std::string& d) {
         return std::vector<std::string>{"sparsify", "--h", "4", "--r", "4", "--degree", "4", "--seed", "17",
                                         "--out", d};
       }},
      {"certify", [&](const std::string& d) {
         return std::vector<std::string>{"certify", "--host", in + "/system.json", "--sparsifier",
                                         in + "/sparsifier.json", "--witness", in + "/witness.json",
                                         "--certificate", in + "/certificate.json", "--out", d + "/check.json"};
       }},
      {"validate", [&](const std::string& d) {
         return std::vector<std::string>{"validate", "--system", in + "/system.json", "--out", d + "/report.json"};
       }},
  };

  int compared = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const auto& [name, make] = commands[i];
    std::vector<std::map<std::string, std::string>> snaps;
    std::vector<std::string> outs;
    const int reps = g_binary.empty() ? 2 : 3;
    for (int rep = 0; rep < reps; ++rep) {
      const fs::path d = root / (std::to_string(i) + "_" + std::to_string(rep));
      fs::create_directories(d);
      if (rep < 2) {
        outs.push_back(run_in_process(make(d.string())));
      } else {
        run_subprocess(make(d.string()), d);
      }
      auto snap = snapshot(d);
      snap.erase("stdout.txt");
      snaps.push_back(std::move(snap));
    }
    if (outs[0] != outs[1]) fail(o, name + ": stdout differs");
    for (std::size_t k = 1; k < snaps.size(); ++k) {
      if (snaps[k] != snaps[0]) fail(o, name + ": artifacts differ on rerun " + std::to_string(k));
    }
    if (snaps[0].empty()) fail(o, name + ": no artifacts written");
    compared += static_cast<int>(snaps[0].size());
  }
  if (o.pass) {
    o.detail = std::to_string(commands.size()) + " commands, " + std::to_string(compared) + " artifacts identical" +
               (g_binary.empty() ? "" : " (including a fresh process)");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  const std::vector<std::pair<int, std::function<Outcome()>>> all{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failed = 0;
  for (const auto& [id, fn] : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s (%.1fs) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
