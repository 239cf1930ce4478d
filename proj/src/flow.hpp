#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace twsparse::detail {

/// Integral max flow by shortest augmenting paths. Arcs are scanned in
/// insertion order, so results depend only on construction order.
class MaxFlow {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t flow;
  };

  explicit MaxFlow(int n) : adj_(n) {}

  int add_arc(int u, int v, std::int64_t cap) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({v, cap, 0});
    arcs_.push_back({u, 0, 0});
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
  }

  std::int64_t run(int s, int t, std::int64_t limit = kInf) {
    std::int64_t total = 0;
    std::vector<int> via(adj_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a : adj_[x]) {
          const Arc& arc = arcs_[a];
          if (via[arc.to] == -1 && arc.cap - arc.flow > 0) {
            via[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[t] == -1) break;
      std::int64_t push = limit - total;
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        const Arc& arc = arcs_[via[x]];
        push = std::min(push, arc.cap - arc.flow);
      }
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].flow += push;
        arcs_[via[x] ^ 1].flow -= push;
      }
      total += push;
    }
    return total;
  }

  /// Nodes reachable from s in the residual graph.
  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : adj_[x]) {
        const Arc& arc = arcs_[a];
        if (!seen[arc.to] && arc.cap - arc.flow > 0) {
          seen[arc.to] = true;
          queue.push_back(arc.to);
        }
      }
    }
    return seen;
  }

  const Arc& arc(int id) const { return arcs_[id]; }
  Arc& arc(int id) { return arcs_[id]; }
  const std::vector<int>& out(int x) const { return adj_[x]; }
  int size() const { return static_cast<int>(adj_.size()); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace twsparse::detail
