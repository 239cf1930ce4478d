#include "twsparse/path_of_sets.hpp"

#include <algorithm>
#include <map>

#include "twsparse/routing.hpp"

namespace twsparse::pos {

bool Report::ok() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.holds; });
}

bool Report::exact() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.exact; });
}

bool Report::failed(const std::string& name) const {
  return std::any_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return c.name == name && !c.holds; });
}

namespace {

class Collector {
 public:
  explicit Collector(Report& r) : r_(r) {}

  Clause& get(const std::string& name) {
    for (Clause& c : r_.clauses) {
      if (c.name == name) return c;
    }
    r_.clauses.push_back({name, true, true, {}});
    return r_.clauses.back();
  }

  void fail(const std::string& name, const std::string& detail) {
    Clause& c = get(name);
    if (c.holds) c.detail = detail;
    c.holds = false;
  }

 private:
  Report& r_;
};

std::string cl(int i) { return "cluster " + std::to_string(i); }

}  // namespace

Report validate(const System& s, std::uint64_t budget, std::uint64_t seed) {
  Report rep;
  Collector c(rep);
  const int r = s.r();
  const int h = s.h();
  c.get("shape");
  if (r == 0 || h == 0 || static_cast<int>(s.A.size()) != r || static_cast<int>(s.B.size()) != r ||
      static_cast<int>(s.connectors.size()) != std::max(0, r - 1)) {
    c.fail("shape", "cluster, interface and connector counts disagree");
    return rep;
  }
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(s.A[i].size()) != h || static_cast<int>(s.B[i].size()) != h) {
      c.fail("shape", cl(i) + " has an interface of the wrong size");
      return rep;
    }
  }

  c.get("disjointness");
  c.get("connectivity");
  c.get("interface");
  std::map<VertexId, int> cluster_of;
  for (int i = 0; i < r; ++i) {
    for (VertexId v : s.clusters[i]) {
      if (!s.host.has_vertex(v)) c.fail("disjointness", "vertex " + std::to_string(v) + " not in host");
      auto [it, fresh] = cluster_of.emplace(v, i);
      if (!fresh) {
        c.fail("disjointness", "vertex " + std::to_string(v) + " in " + cl(it->second) + " and " + cl(i));
      }
    }
  }
  if (!c.get("disjointness").holds) return rep;

  for (int i = 0; i < r; ++i) {
    const Graph sub = s.host.induced_subgraph(s.clusters[i]);
    if (s.clusters[i].empty() || !is_connected(sub)) c.fail("connectivity", cl(i));
    std::set<VertexId> seen;
    bool interface_ok = true;
    for (const auto* side : {&s.A[i], &s.B[i]}) {
      for (VertexId v : *side) {
        if (!s.clusters[i].count(v) || !seen.insert(v).second) interface_ok = false;
      }
    }
    if (!interface_ok) {
      c.fail("interface", cl(i));
      continue;
    }
    const LinkVerdict lv = check_linked(sub, s.A[i], s.B[i], budget, seed);
    Clause& lk = c.get("linked");
    lk.exact = lk.exact && lv.exact;
    if (!lv.holds) c.fail("linked", cl(i));
    if (s.strong) {
      Clause& wl = c.get("well-linked");
      for (const auto* side : {&s.A[i], &s.B[i]}) {
        const LinkVerdict w = check_node_well_linked(sub, *side, budget, seed);
        wl.exact = wl.exact && w.exact;
        if (!w.holds) c.fail("well-linked", cl(i));
      }
    }
  }

  c.get("connector-count");
  c.get("connector-valid");
  c.get("connector-disjoint");
  c.get("connector-interior");
  std::set<VertexId> used;
  for (int i = 0; i + 1 < r; ++i) {
    const auto& bundle = s.connectors[i];
    const std::string tag = "bundle " + std::to_string(i);
    if (static_cast<int>(bundle.size()) != h) c.fail("connector-count", tag);
    std::set<VertexId> fronts, backs;
    for (const Path& p : bundle) {
      if (p.vertices.empty() || !is_valid_path(s.host, p)) {
        c.fail("connector-valid", tag);
        continue;
      }
      fronts.insert(p.front());
      backs.insert(p.back());
      for (VertexId v : p.vertices) {
        if (!used.insert(v).second) c.fail("connector-disjoint", "vertex " + std::to_string(v));
      }
      for (std::size_t k = 1; k + 1 < p.vertices.size(); ++k) {
        if (cluster_of.count(p.vertices[k])) {
          c.fail("connector-interior", "vertex " + std::to_string(p.vertices[k]));
        }
      }
    }
    if (fronts != std::set<VertexId>(s.B[i].begin(), s.B[i].end()) ||
        backs != std::set<VertexId>(s.A[i + 1].begin(), s.A[i + 1].end())) {
      c.fail("connector-valid", tag + " does not join B_i to the next A");
    }
  }
  return rep;
}

System generate_from_grid(int h, int r) {
  if (h < 2 || r < 1) throw ArgumentError("grid system needs h >= 2 and r >= 1");
  const int cols = r * h + r - 1;
  System s;
  s.host = make_grid_graph(h, cols);
  s.strong = true;
  auto id = [cols](int row, int col) { return row * cols + col; };
  for (int i = 0; i < r; ++i) {
    const int c0 = i * (h + 1);
    std::set<VertexId> block;
    std::vector<VertexId> a, b;
    for (int row = 0; row < h; ++row) {
      for (int col = c0; col < c0 + h; ++col) block.insert(id(row, col));
      a.push_back(id(row, c0));
      b.push_back(id(row, c0 + h - 1));
    }
    s.clusters.push_back(std::move(block));
    s.A.push_back(std::move(a));
    s.B.push_back(std::move(b));
  }
  for (int i = 0; i + 1 < r; ++i) {
    const int gap = i * (h + 1) + h;
    std::vector<Path> bundle;
    for (int row = 0; row < h; ++row) {
      Path p;
      p.vertices = {id(row, gap - 1), id(row, gap), id(row, gap + 1)};
      p.edges = {*s.host.find_any_edge(p.vertices[0], p.vertices[1]),
                 *s.host.find_any_edge(p.vertices[1], p.vertices[2])};
      bundle.push_back(std::move(p));
    }
    s.connectors.push_back(std::move(bundle));
  }
  return s;
}

Split split_into_subsystems(const System& s, int N, int rstar) {
  if (N < 1 || rstar < 1 || s.r() != N * rstar) {
    throw ArgumentError("cannot split width " + std::to_string(s.r()) + " into " + std::to_string(N) +
                        " parts of width " + std::to_string(rstar));
  }
  Split out;
  for (int p = 0; p < N; ++p) {
    System part;
    part.host = s.host;
    part.strong = s.strong;
    for (int j = p * rstar; j < (p + 1) * rstar; ++j) {
      part.clusters.push_back(s.clusters[j]);
      part.A.push_back(s.A[j]);
      part.B.push_back(s.B[j]);
      if (j + 1 < (p + 1) * rstar) part.connectors.push_back(s.connectors[j]);
    }
    out.parts.push_back(std::move(part));
    if (p + 1 < N) out.cross_links.push_back(s.connectors[(p + 1) * rstar - 1]);
  }
  return out;
}

}  // namespace twsparse::pos
