#include "twsparse/routing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "flow.hpp"
#include "twsparse/rng.hpp"

namespace twsparse {

using detail::MaxFlow;

std::string_view to_string(PathRole r) {
  switch (r) {
    case PathRole::red:
      return "red";
    case PathRole::blue:
      return "blue";
    case PathRole::none:
      break;
  }
  return "none";
}

std::string_view to_string(CutCertificate c) {
  switch (c) {
    case CutCertificate::enumeration:
      return "enumeration";
    case CutCertificate::flow:
      return "flow";
    case CutCertificate::heuristic:
      return "heuristic";
    case CutCertificate::stoer_wagner:
      return "stoer-wagner";
  }
  return "enumeration";
}

namespace {

std::set<VertexId> checked_set(const Graph& g, const std::vector<VertexId>& xs, const char* name) {
  std::set<VertexId> out;
  for (VertexId v : xs) {
    if (!g.has_vertex(v)) {
      throw ArgumentError(std::string(name) + " contains unknown vertex " + std::to_string(v));
    }
    if (!out.insert(v).second) {
      throw ArgumentError(std::string(name) + " lists vertex " + std::to_string(v) + " twice");
    }
  }
  return out;
}

}  // namespace

RouteResult route_node_disjoint(const Graph& g, const std::vector<VertexId>& S,
                                const std::vector<VertexId>& T, PathRole role) {
  if (S.size() != T.size()) {
    throw ArgumentError("route_node_disjoint: |S|=" + std::to_string(S.size()) +
                        " but |T|=" + std::to_string(T.size()));
  }
  const std::set<VertexId> sset = checked_set(g, S, "S");
  const std::set<VertexId> tset = checked_set(g, T, "T");

  std::set<VertexId> shared;
  std::set_intersection(sset.begin(), sset.end(), tset.begin(), tset.end(),
                        std::inserter(shared, shared.end()));

  const std::vector<VertexId> verts = g.vertices();
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
  const int n = static_cast<int>(verts.size());
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  MaxFlow flow(2 * n + 2);

  for (int i = 0; i < n; ++i) {
    if (!shared.count(verts[i])) flow.add_arc(2 * i, 2 * i + 1, 1);
  }
  std::map<int, EdgeId> arc_edge;
  for (const auto& [id, e] : g.edges()) {
    if (shared.count(e.u) || shared.count(e.v)) continue;
    const int a = index[e.u];
    const int b = index[e.v];
    arc_edge[flow.add_arc(2 * a + 1, 2 * b, MaxFlow::kInf)] = id;
    arc_edge[flow.add_arc(2 * b + 1, 2 * a, MaxFlow::kInf)] = id;
  }
  std::int64_t needed = 0;
  for (VertexId s : sset) {
    if (!shared.count(s)) {
      flow.add_arc(source, 2 * index[s], MaxFlow::kInf);
      ++needed;
    }
  }
  for (VertexId t : tset) {
    if (!shared.count(t)) flow.add_arc(2 * index[t] + 1, sink, MaxFlow::kInf);
  }

  const std::int64_t value = flow.run(source, sink, needed);
  RouteResult result;
  if (value < needed) {
    const std::vector<bool> reach = flow.reachable(source);
    std::vector<VertexId> cut(shared.begin(), shared.end());
    for (int i = 0; i < n; ++i) {
      if (!shared.count(verts[i]) && reach[2 * i] && !reach[2 * i + 1]) cut.push_back(verts[i]);
    }
    std::sort(cut.begin(), cut.end());
    result.cut = std::move(cut);
    return result;
  }

  PathSet ps;
  ps.role = role;
  ps.sources.assign(sset.begin(), sset.end());
  ps.sinks.assign(tset.begin(), tset.end());
  for (VertexId v : shared) ps.paths.push_back(Path{{v}, {}});
  for (VertexId s : sset) {
    if (shared.count(s)) continue;
    Path p{{s}, {}};
    int x = 2 * index[s] + 1;
    while (true) {
      int next = -1;
      for (int a : flow.out(x)) {
        if ((a & 1) == 0 && flow.arc(a).flow > 0) {
          next = a;
          break;
        }
      }
      if (next < 0) throw InvariantError("flow decomposition lost a path");
      flow.arc(next).flow -= 1;
      flow.arc(next ^ 1).flow += 1;
      const int to = flow.arc(next).to;
      if (to == sink) break;
      const int i = to / 2;
      p.vertices.push_back(verts[i]);
      p.edges.push_back(arc_edge.at(next));
      x = to + 1;
    }
    ps.paths.push_back(std::move(p));
  }
  std::sort(ps.paths.begin(), ps.paths.end(),
            [](const Path& a, const Path& b) { return a.front() < b.front(); });
  result.routing = std::move(ps);
  return result;
}

PathSet route_or_throw(const Graph& g, const std::vector<VertexId>& S,
                       const std::vector<VertexId>& T, PathRole role) {
  RouteResult r = route_node_disjoint(g, S, T, role);
  if (!r.ok()) {
    throw InfeasibleError("vertex sets of size " + std::to_string(S.size()) +
                              " are separated by a cut of size " + std::to_string(r.cut.size()),
                          r.cut);
  }
  return std::move(*r.routing);
}

Verdict verify_path_set(const Graph& g, const PathSet& ps) {
  Verdict v;
  const std::set<VertexId> sources(ps.sources.begin(), ps.sources.end());
  const std::set<VertexId> sinks(ps.sinks.begin(), ps.sinks.end());
  if (ps.paths.size() != sources.size()) {
    v.add("bijection", std::to_string(ps.paths.size()) + " paths for " +
                           std::to_string(sources.size()) + " sources");
  }
  std::set<VertexId> used;
  std::set<VertexId> starts;
  for (const Path& p : ps.paths) {
    if (!is_valid_path(g, p)) {
      v.add("path-validity", "path from " + std::to_string(p.vertices.empty() ? -1 : p.front()) +
                                 " is not a simple path of the graph");
      continue;
    }
    if (!sources.count(p.front())) v.add("source", "path starts outside the source set");
    if (!sinks.count(p.back())) v.add("sink", "path ends outside the sink set");
    starts.insert(p.front());
    for (VertexId x : p.vertices) {
      if (!used.insert(x).second) v.add("disjointness", "vertex " + std::to_string(x) + " is shared");
    }
  }
  if (starts != sources && v.ok()) v.add("bijection", "some source has no path");
  return v;
}

namespace {

/// Number of subset pairs, saturating once it exceeds `cap`.
std::uint64_t saturating_add(std::uint64_t a, long double b, std::uint64_t cap) {
  const long double s = static_cast<long double>(a) + b;
  return s > static_cast<long double>(cap) ? cap + 1 : static_cast<std::uint64_t>(s);
}

long double binom(int n, int k) {
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<VertexId> pick(const std::vector<VertexId>& xs, const std::vector<int>& idx) {
  std::vector<VertexId> out;
  for (int i : idx) out.push_back(xs[i]);
  return out;
}

std::vector<VertexId> sample_subset(const std::vector<VertexId>& xs, int k, Rng& rng) {
  std::vector<VertexId> pool = xs;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool record(LinkVerdict& v, const Graph& g, const std::vector<VertexId>& a,
            const std::vector<VertexId>& b) {
  ++v.tested;
  RouteResult r = route_node_disjoint(g, a, b);
  if (r.ok()) return true;
  v.holds = false;
  v.fail_from = a;
  v.fail_to = b;
  v.cut = r.cut;
  return false;
}

}  // namespace

LinkVerdict check_linked(const Graph& g, const std::vector<VertexId>& A,
                         const std::vector<VertexId>& B, std::uint64_t budget, std::uint64_t seed) {
  std::vector<VertexId> a(A.begin(), A.end());
  std::vector<VertexId> b(B.begin(), B.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (VertexId x : a) {
    if (std::binary_search(b.begin(), b.end(), x)) {
      throw ArgumentError("check_linked: A and B share vertex " + std::to_string(x));
    }
  }
  const int kmax = static_cast<int>(std::min(a.size(), b.size()));
  std::uint64_t total = 0;
  for (int k = 1; k <= kmax; ++k) {
    total = saturating_add(total, binom(a.size(), k) * binom(b.size(), k), budget);
  }
  LinkVerdict v;
  if (total <= budget) {
    for (int k = 1; k <= kmax; ++k) {
      const auto ca = combinations(a.size(), k);
      const auto cb = combinations(b.size(), k);
      for (const auto& x : ca) {
        for (const auto& y : cb) {
          if (!record(v, g, pick(a, x), pick(b, y))) return v;
        }
      }
    }
    return v;
  }
  v.exact = false;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const int k = 1 + static_cast<int>(rng.below(kmax));
    if (!record(v, g, sample_subset(a, k, rng), sample_subset(b, k, rng))) return v;
  }
  return v;
}

LinkVerdict check_node_well_linked(const Graph& g, const std::vector<VertexId>& T,
                                   std::uint64_t budget, std::uint64_t seed) {
  std::vector<VertexId> t(T.begin(), T.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  const int n = static_cast<int>(t.size());
  std::uint64_t total = 0;
  for (int k = 1; k <= n; ++k) {
    const long double c = binom(n, k);
    total = saturating_add(total, c * (c + 1) / 2, budget);
  }
  LinkVerdict v;
  if (total <= budget) {
    for (int k = 1; k <= n; ++k) {
      const auto cs = combinations(n, k);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          if (!record(v, g, pick(t, cs[i]), pick(t, cs[j]))) return v;
        }
      }
    }
    return v;
  }
  v.exact = false;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const int k = 1 + static_cast<int>(rng.below(n));
    if (!record(v, g, sample_subset(t, k, rng), sample_subset(t, k, rng))) return v;
  }
  return v;
}

namespace {

struct Candidate {
  double ratio;
  std::size_t imbalance;
  CutReport report;
};

bool better(const Candidate& c, const std::optional<Candidate>& best) {
  if (!best) return true;
  if (c.ratio < best->ratio - 1e-12) return true;
  return c.ratio <= best->ratio + 1e-12 && c.imbalance < best->imbalance;
}

}  // namespace

WellLinkedVerdict check_alpha_well_linked(const Graph& g, const std::vector<VertexId>& T,
                                          double alpha, std::uint64_t budget, int exact_threshold,
                                          std::uint64_t seed) {
  if (!(alpha > 0.0)) throw ArgumentError("alpha must be positive");
  const std::set<VertexId> tset = checked_set(g, T, "T");
  const std::vector<VertexId> verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::optional<Candidate> best;
  WellLinkedVerdict out;

  auto consider = [&](const std::set<VertexId>& side, std::size_t crossing, CutCertificate cert) {
    std::size_t in_t = 0;
    for (VertexId x : side) in_t += tset.count(x);
    const std::size_t den = std::min(in_t, tset.size() - in_t);
    if (den == 0) return;
    const std::size_t other = verts.size() - side.size();
    Candidate c{static_cast<double>(crossing) / den,
                side.size() > other ? side.size() - other : other - side.size(),
                CutReport{side, crossing, static_cast<double>(crossing) / den, cert}};
    if (better(c, best)) best = std::move(c);
  };

  if (tset.size() >= 2 && n <= exact_threshold && n <= 31) {
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    std::vector<std::pair<int, int>> ends;
    for (const auto& [id, e] : g.edges()) ends.emplace_back(index[e.u], index[e.v]);
    std::uint32_t tmask = 0;
    for (VertexId x : tset) tmask |= 1u << index[x];
    const std::size_t tcount = tset.size();
    const std::uint32_t limit = 1u << (n - 1);
    // Bit i+1 set means vertex i+1 lies on the far side; vertex 0 stays near.
    for (std::uint32_t m = 1; m < limit; ++m) {
      const std::uint32_t far = m << 1;
      const std::size_t far_t = std::popcount(far & tmask);
      const std::size_t den = std::min(far_t, tcount - far_t);
      if (den == 0) continue;
      std::size_t crossing = 0;
      for (auto [a, b] : ends) crossing += ((far >> a) & 1u) != ((far >> b) & 1u);
      const double ratio = static_cast<double>(crossing) / den;
      const std::size_t far_n = std::popcount(far);
      const std::size_t imbalance = far_n * 2 > static_cast<std::size_t>(n)
                                        ? far_n * 2 - n
                                        : n - far_n * 2;
      if (best && !(ratio < best->ratio - 1e-12 ||
                    (ratio <= best->ratio + 1e-12 && imbalance < best->imbalance))) {
        continue;
      }
      std::set<VertexId> side;
      for (int i = 0; i < n; ++i) {
        if (!((far >> i) & 1u)) side.insert(verts[i]);
      }
      best = Candidate{ratio, imbalance,
                       CutReport{std::move(side), crossing, ratio, CutCertificate::enumeration}};
    }
  } else if (tset.size() >= 2) {
    const std::vector<VertexId> t(tset.begin(), tset.end());
    const int tn = static_cast<int>(t.size());
    const bool enumerate = tn - 1 < 63 && (std::uint64_t{1} << (tn - 1)) - 1 <= budget;
    auto lift = [&](std::uint64_t far) {
      std::set<VertexId> x;
      std::set<VertexId> y;
      for (int i = 0; i < tn; ++i) ((far >> i) & 1u ? y : x).insert(t[i]);
      CutReport r = min_edge_cut(g, x, y);
      consider(r.side, r.crossing, enumerate ? CutCertificate::flow : CutCertificate::heuristic);
    };
    if (enumerate) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << (tn - 1)); ++m) lift(m << 1);
    } else {
      out.exact = false;
      for (VertexId v : verts) {
        std::set<VertexId> side{v};
        consider(side, g.degree(v), CutCertificate::heuristic);
      }
      Rng rng(seed);
      const std::uint64_t samples = std::min<std::uint64_t>(budget, 4096);
      for (std::uint64_t i = 0; i < samples; ++i) {
        std::set<VertexId> x;
        std::set<VertexId> y;
        for (VertexId v : t) (rng.below(2) ? y : x).insert(v);
        if (x.empty() || y.empty()) continue;
        CutReport r = min_edge_cut(g, x, y);
        consider(r.side, r.crossing, CutCertificate::heuristic);
      }
    }
  }
  if (best) {
    out.holds = best->ratio >= alpha - 1e-12;
    out.worst = std::move(best->report);
  }
  return out;
}

}  // namespace twsparse
