#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "twsparse/graph.hpp"

namespace twsparse::pos {

/// Ordered clusters S_1..S_r with interfaces A_i, B_i of size h and connector
/// bundles: connectors[i] holds h disjoint host paths from B_i to A_{i+1}.
struct System {
  Graph host;
  std::vector<std::set<VertexId>> clusters;
  std::vector<std::vector<VertexId>> A;
  std::vector<std::vector<VertexId>> B;
  std::vector<std::vector<Path>> connectors;
  bool strong = true;

  int r() const { return static_cast<int>(clusters.size()); }
  int h() const { return A.empty() ? 0 : static_cast<int>(A.front().size()); }
  bool operator==(const System&) const = default;
};

struct Clause {
  std::string name;
  bool holds = true;
  bool exact = true;
  std::string detail;
};

struct Report {
  std::vector<Clause> clauses;

  bool ok() const;
  bool exact() const;
  /// True if a clause with this name failed.
  bool failed(const std::string& name) const;
};

Report validate(const System& s, std::uint64_t budget = 1u << 20, std::uint64_t seed = 0);

/// h x (r*h + r - 1) grid. Cluster i is the h x h block at columns
/// i*(h+1) .. i*(h+1)+h-1; A_i is its left column, B_i its right column, and
/// consecutive blocks are joined by the h rows through the gap column.
System generate_from_grid(int h, int r);

struct Split {
  std::vector<System> parts;
  /// cross_links[i] joins the last cluster of part i to the first of part i+1.
  std::vector<std::vector<Path>> cross_links;
};

/// Cuts a width N*rstar system into N consecutive width-rstar systems on the
/// same host. Throws ArgumentError unless r == N * rstar.
Split split_into_subsystems(const System& s, int N, int rstar);

}  // namespace twsparse::pos
