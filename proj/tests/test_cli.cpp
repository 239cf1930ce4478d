#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "instances.hpp"
#include "twsparse/cli.hpp"
#include "twsparse/json_io.hpp"
#include "twsparse/path_of_sets.hpp"

using namespace twsparse;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("twsparse_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string list(const std::vector<VertexId>& v) { return json(v).dump(); }

}  // namespace

TEST_CASE("generate grid-pos writes a valid system") {
  const std::string dir = fresh_dir("grid");
  const Result r = run({"generate", "grid-pos", "--h", "4", "--r", "3", "--out", dir});
  CHECK(r.code == kOk);
  const pos::System s = read_json_file(dir + "/system.json").get<pos::System>();
  CHECK(s.h() == 4);
  CHECK(s.r() == 3);
  CHECK(pos::validate(s).ok());
  CHECK(run({"validate", "--system", dir + "/system.json"}).code == kOk);
}

TEST_CASE("usage errors") {
  CHECK(run({"generate", "grid-pos", "--h", "4", "--out", fresh_dir("usage")}).code == kIo);
  CHECK(run({}).code == kIo);
  CHECK(run({"frobnicate"}).code == kIo);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("generated random graphs are deterministic") {
  const std::string a = fresh_dir("rand_a");
  const std::string b = fresh_dir("rand_b");
  CHECK(run({"generate", "random-graph", "--n", "30", "--seed", "5", "--out", a}).code == kOk);
  CHECK(run({"generate", "random-graph", "--n", "30", "--seed", "5", "--out", b}).code == kOk);
  CHECK(slurp(a + "/host.json") == slurp(b + "/host.json"));
  CHECK_FALSE(slurp(a + "/host.json").empty());
}

TEST_CASE("route2") {
  const std::string dir = fresh_dir("route2");
  SUBCASE("star instance") {
    put(dir + "/g.txt", "0 1\n0 2\n0 3\n0 4\n");
    put(dir + "/s1", "1");
    put(dir + "/t1", "2");
    put(dir + "/s2", "3");
    put(dir + "/t2", "4");
    const Result r = run({"route2", "--graph", dir + "/g.txt", "--s1", dir + "/s1", "--t1", dir + "/t1", "--s2",
                          dir + "/s2", "--t2", dir + "/t2"});
    CHECK(r.code == kOk);
    const json rep = json::parse(r.out);
    CHECK(rep.at("tau").at("minor") == 1);
    CHECK(rep.at("ok") == true);
  }
  SUBCASE("infeasible pair") {
    put(dir + "/g.txt", "0 1\n0 2\n0 3\n");
    put(dir + "/s1", "[1, 2]");
    put(dir + "/t1", "[3, 0]");
    put(dir + "/s2", "[1]");
    put(dir + "/t2", "[2]");
    const Result r = run({"route2", "--graph", dir + "/g.txt", "--s1", dir + "/s1", "--t1", dir + "/t1", "--s2",
                          dir + "/s2", "--t2", dir + "/t2"});
    CHECK(r.code == kInfeasible);
    CHECK(json::parse(r.out).at("cut") == json::array({0}));
  }
  SUBCASE("random k=2 instance") {
    Rng rng(31);
    const inst::TwoPair t = inst::random_two_pair(40, 2, 2, rng);
    put(dir + "/g.json", json(t.g).dump());
    put(dir + "/s1", list(t.S1));
    put(dir + "/t1", list(t.T1));
    put(dir + "/s2", list(t.S2));
    put(dir + "/t2", list(t.T2));
    const Result r = run({"route2", "--graph", dir + "/g.json", "--s1", dir + "/s1", "--t1", dir + "/t1", "--s2",
                          dir + "/s2", "--t2", dir + "/t2", "--out", dir + "/rep.json"});
    CHECK(r.code == kOk);
    const json rep = read_json_file(dir + "/rep.json");
    CHECK(rep.at("tau").at("minor_vertices").get<int>() <= 72);
  }
  CHECK(run({"route2", "--graph", dir + "/none", "--s1", "a", "--t1", "b", "--s2", "c", "--t2", "d"}).code == kIo);
}

TEST_CASE("sparsify degree bounds and reruns") {
  const std::string d4 = fresh_dir("sp4");
  const Result four = run({"sparsify", "--h", "2", "--r", "2", "--degree", "4", "--seed", "1", "--out", d4});
  CHECK(four.code == kOk);
  CHECK(json::parse(four.out).at("max_degree").get<int>() <= 4);

  const std::string a = fresh_dir("sp3a");
  const std::string b = fresh_dir("sp3b");
  const Result x = run({"sparsify", "--h", "2", "--r", "2", "--seed", "1", "--out", a});
  const Result y = run({"sparsify", "--h", "2", "--r", "2", "--seed", "1", "--out", b});
  CHECK(x.code == kOk);
  CHECK(json::parse(x.out).at("max_degree").get<int>() <= 3);
  CHECK(x.out == y.out);
  for (const char* f : {"/sparsifier.json", "/witness.json", "/certificate.json"}) {
    CHECK(slurp(a + f) == slurp(b + f));
  }
  CHECK(run({"sparsify", "--h", "2", "--r", "2", "--out", a}).code == kIo);
  CHECK(run({"sparsify", "--h", "3", "--r", "2", "--seed", "1", "--out", a}).code == kIo);
}

TEST_CASE("certify") {
  const std::string dir = fresh_dir("certify");
  REQUIRE(run({"generate", "grid-pos", "--h", "2", "--r", "4", "--out", dir}).code == kOk);
  REQUIRE(run({"sparsify", "--system", dir + "/system.json", "--n-expanders", "2", "--seed", "3", "--out", dir})
              .code == kOk);
  const std::vector<std::string> base{"certify", "--host", dir + "/system.json", "--sparsifier",
                                      dir + "/sparsifier.json", "--certificate", dir + "/certificate.json"};
  auto with = [&](const std::string& witness) {
    std::vector<std::string> a = base;
    a.push_back("--witness");
    a.push_back(witness);
    return run(a);
  };

  const Result ok = with(dir + "/witness.json");
  CHECK(ok.code == kOk);
  CHECK(json::parse(ok.out).at("ok") == true);

  json w = read_json_file(dir + "/witness.json");
  json& paths = w.at("edge_paths");
  REQUIRE(!paths.empty());
  json& first = paths.at(0).at("path").at("vertices");
  first.back() = first.back().get<int>() ^ 1;
  write_json_file(dir + "/tampered.json", w);
  const Result bad = with(dir + "/tampered.json");
  CHECK(bad.code == kInvariant);
  const json rep = json::parse(bad.out);
  CHECK(rep.at("ok") == false);
  CHECK_FALSE(rep.at("failed").empty());

  CHECK(with(dir + "/missing.json").code == kIo);
}
