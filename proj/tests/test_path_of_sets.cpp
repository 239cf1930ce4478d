#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "twsparse/json_io.hpp"
#include "twsparse/path_of_sets.hpp"

using namespace twsparse;
using namespace twsparse::pos;

namespace {

std::vector<std::vector<VertexId>> subsets(const std::vector<VertexId>& xs) {
  std::vector<std::vector<VertexId>> out;
  for (std::uint32_t m = 0; m < (1u << xs.size()); ++m) {
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if ((m >> i) & 1) s.push_back(xs[i]);
    }
    out.push_back(s);
  }
  return out;
}

// Linked and node-well-linked by brute-force path search.
bool oracle_valid_clusters(const System& s) {
  for (int i = 0; i < s.r(); ++i) {
    const Graph g = s.host.induced_subgraph(s.clusters[i]);
    for (const auto& a : subsets(s.A[i])) {
      for (const auto& b : subsets(s.B[i])) {
        if (a.size() == b.size() && !oracle::routable(g, a, b)) return false;
      }
      for (const auto& a2 : subsets(s.A[i])) {
        if (a.size() != a2.size()) continue;
        // Shared vertices become zero-length paths.
        std::vector<VertexId> x, y;
        std::set<VertexId> common;
        std::set_intersection(a.begin(), a.end(), a2.begin(), a2.end(), std::inserter(common, common.end()));
        for (VertexId v : a) {
          if (!common.count(v)) x.push_back(v);
        }
        for (VertexId v : a2) {
          if (!common.count(v)) y.push_back(v);
        }
        Graph h = g;
        for (VertexId v : common) h.remove_vertex(v);
        if (!oracle::routable(h, x, y)) return false;
      }
    }
  }
  return true;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("grid system h=2, r=2") {
  const System s = generate_from_grid(2, 2);
  CHECK(s.host.num_vertices() == 2 * 5);
  CHECK(s.host.num_edges() == make_grid_graph(2, 5).num_edges());
  REQUIRE(s.r() == 2);
  CHECK(s.h() == 2);
  CHECK(s.clusters[0].size() == 4);
  CHECK(s.clusters[1].size() == 4);
  REQUIRE(s.connectors.size() == 1);
  CHECK(s.connectors[0].size() == 2);
  for (const Path& p : s.connectors[0]) {
    CHECK(is_valid_path(s.host, p));
    CHECK(p.edges.size() == 2);
  }
  const Report rep = validate(s);
  CHECK(rep.ok());
  CHECK(rep.exact());
  CHECK(oracle_valid_clusters(s));
}

TEST_CASE("grid system h=4, r=3 validates exactly") {
  const System s = generate_from_grid(4, 3);
  const Report rep = validate(s);
  CHECK(rep.ok());
  CHECK(rep.exact());
  CHECK(oracle_valid_clusters(s));
}

TEST_CASE("odd h is legal here") {
  const System s = generate_from_grid(3, 2);
  CHECK(s.h() == 3);
  CHECK(validate(s).ok());
}

TEST_CASE("overlapping clusters are rejected") {
  System s = generate_from_grid(2, 2);
  s.clusters[1].insert(*s.clusters[0].begin());
  const Report rep = validate(s);
  CHECK_FALSE(rep.ok());
  CHECK(rep.failed("disjointness"));
}

TEST_CASE("connector through a third cluster is rejected") {
  System s = generate_from_grid(2, 3);
  Path& p = s.connectors[0][0];
  const VertexId gap = p.vertices[1];
  const VertexId end = p.vertices.back();
  const VertexId far = *s.clusters[2].begin();
  const EdgeId a = s.host.add_edge(gap, far);
  const EdgeId b = s.host.add_edge(far, end);
  p = Path{{p.vertices[0], gap, far, end}, {p.edges[0], a, b}};
  const Report rep = validate(s);
  CHECK_FALSE(rep.ok());
  CHECK(rep.failed("connector-interior"));
}

TEST_CASE("splitting into subsystems") {
  const System four = generate_from_grid(2, 4);
  const Split two = split_into_subsystems(four, 2, 2);
  REQUIRE(two.parts.size() == 2);
  CHECK(two.parts[0].r() == 2);
  CHECK(two.parts[1].r() == 2);
  CHECK(two.cross_links.size() == 1);

  const System six = generate_from_grid(2, 6);
  const Split three = split_into_subsystems(six, 3, 2);
  REQUIRE(three.parts.size() == 3);
  for (const System& part : three.parts) {
    CHECK(part.r() == 2);
    CHECK(validate(part).ok());
  }
  CHECK(three.cross_links.size() == 2);
  CHECK(three.cross_links[1] == six.connectors[3]);

  CHECK_THROWS_AS(split_into_subsystems(six, 4, 2), ArgumentError);
}

TEST_CASE("system JSON round trip and errors") {
  const System s = generate_from_grid(2, 3);
  const json j = s;
  CHECK(j.at("version") == kFormatVersion);
  CHECK(j.get<System>() == s);

  const std::string path = temp_file("twsparse_sys.json", j.dump(2));
  CHECK(read_json_file(path).get<System>() == s);

  const std::string broken = temp_file("twsparse_bad.json", "{\n  \"version\": 1,\n  \"host\": [\n}\n");
  try {
    read_json_file(broken);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }

  json old = j;
  old["version"] = 99;
  CHECK_THROWS_AS(old.get<System>(), VersionError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/twsparse.json"), NotFoundError);
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# triangle\n0 1\n1 2 red\n\n2 0\n");
  CHECK(g.num_edges() == 3);
  CHECK(g.edge(*g.find_any_edge(1, 2)).color == Color::red);
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  const Graph back = json(g).get<Graph>();
  CHECK(back == g);
}
