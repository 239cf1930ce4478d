#pragma once

#include <json.hpp>
#include <string>

#include "twsparse/cut_matching.hpp"
#include "twsparse/graph.hpp"
#include "twsparse/minor.hpp"
#include "twsparse/path_of_sets.hpp"
#include "twsparse/pipeline.hpp"
#include "twsparse/routing.hpp"

namespace twsparse {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

void to_json(json& j, const Graph& g);
void from_json(const json& j, Graph& g);
void to_json(json& j, const Path& p);
void from_json(const json& j, Path& p);
void to_json(json& j, const PathSet& ps);
void from_json(const json& j, PathSet& ps);
void to_json(json& j, const MinorModel& m);
void from_json(const json& j, MinorModel& m);
void to_json(json& j, const TopoWitness& w);
void from_json(const json& j, TopoWitness& w);

namespace cmg {
void to_json(json& j, const Round& r);
void from_json(const json& j, Round& r);
void to_json(json& j, const Embedding& e);
void from_json(const json& j, Embedding& e);
}  // namespace cmg

namespace pos {
/// Carries a "version" field; from_json throws VersionError on mismatch.
void to_json(json& j, const System& s);
void from_json(const json& j, System& s);
}  // namespace pos

namespace pipeline {
void to_json(json& j, const Config& c);
void from_json(const json& j, Config& c);
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NominalValues, N, theta, rstar)
/// Everything a certificate is recomputed from, except H* and its witness.
json evidence_to_json(const Run& run);
Run evidence_from_json(const json& j);
}  // namespace pipeline

/// Reads a JSON file. Missing files raise NotFoundError; syntax errors raise
/// ParseError with the offending line.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Plain edge list: one "u v [color]" line per edge, '#' starts a comment.
Graph parse_edge_list(const std::string& text);

/// JSON graph or edge list, chosen by the first non-blank character.
Graph read_graph_file(const std::string& path);

/// Vertex list given as a JSON array or whitespace-separated integers.
std::vector<VertexId> read_vertex_list(const std::string& path);

/// FNV-1a over the compact dump.
std::string content_hash(const json& j);

}  // namespace twsparse
