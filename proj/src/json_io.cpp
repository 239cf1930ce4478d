#include "twsparse/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace twsparse {

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (const auto& [id, e] : g.edges()) {
    json x = {{"id", id}, {"u", e.u}, {"v", e.v}};
    if (e.color != Color::none) x["color"] = std::string(to_string(e.color));
    edges.push_back(std::move(x));
  }
  j = {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

void from_json(const json& j, Graph& g) {
  g = Graph();
  for (VertexId v : j.at("vertices").get<std::vector<VertexId>>()) g.add_vertex(v);
  for (const json& e : j.at("edges")) {
    const Color c = e.contains("color") ? color_from_string(e.at("color").get<std::string>()) : Color::none;
    g.add_edge_with_id(e.at("id").get<EdgeId>(), e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), c);
  }
}

void to_json(json& j, const Path& p) { j = {{"vertices", p.vertices}, {"edges", p.edges}}; }

void from_json(const json& j, Path& p) {
  p.vertices = j.at("vertices").get<std::vector<VertexId>>();
  p.edges = j.at("edges").get<std::vector<EdgeId>>();
}

namespace {

PathRole role_from_string(const std::string& s) {
  if (s == "red") return PathRole::red;
  if (s == "blue") return PathRole::blue;
  if (s == "none") return PathRole::none;
  throw ArgumentError("unknown path role '" + s + "'");
}

}  // namespace

void to_json(json& j, const PathSet& ps) {
  j = {{"role", std::string(to_string(ps.role))},
       {"sources", ps.sources},
       {"sinks", ps.sinks},
       {"paths", ps.paths}};
}

void from_json(const json& j, PathSet& ps) {
  ps.role = role_from_string(j.at("role").get<std::string>());
  ps.sources = j.at("sources").get<std::vector<VertexId>>();
  ps.sinks = j.at("sinks").get<std::vector<VertexId>>();
  ps.paths = j.at("paths").get<std::vector<Path>>();
}

void to_json(json& j, const MinorModel& m) {
  json branch = json::array();
  for (const auto& [v, set] : m.branch) branch.push_back({{"vertex", v}, {"set", set}});
  json edges = json::array();
  for (const auto& [e, f] : m.edge_map) edges.push_back({e, f});
  j = {{"branch", std::move(branch)}, {"edge_map", std::move(edges)}};
}

void from_json(const json& j, MinorModel& m) {
  m = MinorModel();
  for (const json& b : j.at("branch")) m.branch[b.at("vertex").get<VertexId>()] = b.at("set").get<std::set<VertexId>>();
  for (const json& e : j.at("edge_map")) m.edge_map[e.at(0).get<EdgeId>()] = e.at(1).get<EdgeId>();
}

void to_json(json& j, const TopoWitness& w) {
  json vm = json::array();
  for (const auto& [a, b] : w.vertex_map) vm.push_back({a, b});
  json ep = json::array();
  for (const auto& [e, p] : w.edge_paths) ep.push_back({{"edge", e}, {"path", p}});
  j = {{"vertex_map", std::move(vm)}, {"edge_paths", std::move(ep)}};
}

void from_json(const json& j, TopoWitness& w) {
  w = TopoWitness();
  for (const json& x : j.at("vertex_map")) w.vertex_map[x.at(0).get<VertexId>()] = x.at(1).get<VertexId>();
  for (const json& x : j.at("edge_paths")) w.edge_paths[x.at("edge").get<EdgeId>()] = x.at("path").get<Path>();
}

namespace cmg {

void to_json(json& j, const Round& r) {
  json m = json::array();
  for (auto [y, z] : r.matching) m.push_back({y, z});
  j = {{"Y", r.partition.Y}, {"Z", r.partition.Z}, {"matching", std::move(m)}};
}

void from_json(const json& j, Round& r) {
  r.partition.Y = j.at("Y").get<std::vector<int>>();
  r.partition.Z = j.at("Z").get<std::vector<int>>();
  r.matching.clear();
  for (const json& p : j.at("matching")) r.matching.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
}

void to_json(json& j, const Embedding& e) {
  json edges = json::array();
  for (auto [u, v] : e.x.edges) edges.push_back({u, v});
  j = {{"n", e.x.n},
       {"edges", std::move(edges)},
       {"vertex_sets", e.vertex_sets},
       {"vertex_edges", e.vertex_edges},
       {"edge_paths", e.edge_paths}};
}

void from_json(const json& j, Embedding& e) {
  e.x.n = j.at("n").get<int>();
  e.x.edges.clear();
  for (const json& p : j.at("edges")) e.x.edges.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  e.vertex_sets = j.at("vertex_sets").get<std::vector<std::set<VertexId>>>();
  e.vertex_edges = j.at("vertex_edges").get<std::vector<std::set<EdgeId>>>();
  e.edge_paths = j.at("edge_paths").get<std::vector<Path>>();
}

}  // namespace cmg

namespace {

void check_version(const json& j) {
  if (!j.contains("version")) throw VersionError("missing version field");
  const json& v = j.at("version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    throw VersionError("unsupported version " + v.dump() + ", expected " + std::to_string(kFormatVersion));
  }
}

}  // namespace

namespace pos {

void to_json(json& j, const System& s) {
  json interfaces = json::array();
  for (std::size_t i = 0; i < s.A.size(); ++i) interfaces.push_back({{"A", s.A[i]}, {"B", s.B[i]}});
  j = {{"version", kFormatVersion},
       {"host", s.host},
       {"clusters", s.clusters},
       {"interfaces", std::move(interfaces)},
       {"connectors", s.connectors},
       {"strong", s.strong}};
}

void from_json(const json& j, System& s) {
  check_version(j);
  s = System();
  s.host = j.at("host").get<Graph>();
  s.clusters = j.at("clusters").get<std::vector<std::set<VertexId>>>();
  for (const json& f : j.at("interfaces")) {
    s.A.push_back(f.at("A").get<std::vector<VertexId>>());
    s.B.push_back(f.at("B").get<std::vector<VertexId>>());
  }
  s.connectors = j.at("connectors").get<std::vector<std::vector<Path>>>();
  s.strong = j.at("strong").get<bool>();
}

}  // namespace pos

namespace pipeline {

void to_json(json& j, const Config& c) {
  j = {{"h", c.h},         {"r", c.r},         {"rstar", c.rstar}, {"N", c.N},
       {"theta", c.theta}, {"seed", c.seed}, {"budget", c.budget}};
}

void from_json(const json& j, Config& c) {
  c.h = j.at("h").get<int>();
  c.r = j.at("r").get<int>();
  c.rstar = j.at("rstar").get<int>();
  c.N = j.at("N").get<int>();
  c.theta = j.at("theta").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.budget = j.at("budget").get<std::uint64_t>();
}

json evidence_to_json(const Run& run) {
  json cluster_of = json::array();
  for (const auto& [v, c] : run.state.cluster_of) cluster_of.push_back({v, c});
  json expanders = json::array();
  for (const ExpanderRun& e : run.expanders) {
    expanders.push_back(
        {{"first_cluster", e.first_cluster}, {"embedding", e.embedding}, {"transcript", e.transcript}});
  }
  json chosen = json::array();
  for (const auto& [e, vs] : run.sampling.chosen_by) chosen.push_back({e, vs});
  return {{"version", kFormatVersion},
          {"config", run.config},
          {"degree", run.degree},
          {"A", run.state.A},
          {"H", run.state.H},
          {"cluster_of", std::move(cluster_of)},
          {"horizontal", run.state.horizontal},
          {"expanders", std::move(expanders)},
          {"sampling", {{"deleted", run.sampling.deleted}, {"chosen_by", std::move(chosen)}}},
          {"segments", run.segments}};
}

Run evidence_from_json(const json& j) {
  check_version(j);
  Run run;
  run.config = j.at("config").get<Config>();
  run.degree = j.at("degree").get<int>();
  run.state.A = j.at("A").get<std::vector<VertexId>>();
  run.state.H = j.at("H").get<Graph>();
  for (const json& x : j.at("cluster_of")) run.state.cluster_of[x.at(0).get<VertexId>()] = x.at(1).get<int>();
  run.state.horizontal = j.at("horizontal").get<std::vector<Path>>();
  for (const json& x : j.at("expanders")) {
    ExpanderRun e;
    e.first_cluster = x.at("first_cluster").get<int>();
    e.embedding = x.at("embedding").get<cmg::Embedding>();
    e.transcript = x.at("transcript").get<std::vector<cmg::Round>>();
    run.expanders.push_back(std::move(e));
  }
  const json& s = j.at("sampling");
  run.sampling.deleted = s.at("deleted").get<std::vector<EdgeId>>();
  for (const json& x : s.at("chosen_by")) {
    run.sampling.chosen_by[x.at(0).get<EdgeId>()] = x.at(1).get<std::vector<VertexId>>();
  }
  run.segments = j.at("segments").get<Segmentation>();
  return run;
}

}  // namespace pipeline

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(path + ": malformed JSON", line);
  }
}

char first_char(const std::string& text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c;
  }
  return '\0';
}

}  // namespace

json read_json_file(const std::string& path) { return parse_text(slurp(path), path); }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NotFoundError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw NotFoundError("write failed for " + path);
}

Graph parse_edge_list(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) {
      if (first_char(line) != '\0') throw ParseError("expected an edge 'u v [color]'", lineno);
      continue;
    }
    std::string color, rest;
    if (!(ls >> v)) throw ParseError("expected an edge 'u v [color]'", lineno);
    ls >> color;
    if (ls >> rest) throw ParseError("expected an edge 'u v [color]'", lineno);
    if (u < 0 || v < 0 || u > INT32_MAX || v > INT32_MAX) throw ParseError("vertex id out of range", lineno);
    try {
      const Color c = color.empty() ? Color::none : color_from_string(color);
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), c);
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  const std::string text = slurp(path);
  if (first_char(text) != '{') return parse_edge_list(text);
  const json j = parse_text(text, path);
  try {
    return j.get<Graph>();
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  } catch (const ArgumentError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

std::vector<VertexId> read_vertex_list(const std::string& path) {
  const std::string text = slurp(path);
  if (first_char(text) == '[') {
    try {
      return parse_text(text, path).get<std::vector<VertexId>>();
    } catch (const json::exception& e) {
      throw ParseError(path + ": " + e.what(), 0);
    }
  }
  std::vector<VertexId> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError(path + ": bad vertex '" + tok + "'", 0);
    }
  }
  return out;
}

std::string content_hash(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace twsparse
