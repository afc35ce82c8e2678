#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <vector>

namespace negdsd {

/// Dinic's algorithm on integral capacities. Arcs are stored in pairs (a, a^1)
/// so the residual of the reverse arc is always at index a ^ 1. The augmenting
/// search is iterative, so long level graphs do not grow the call stack.
template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t num_vertices) : head_(num_vertices, -1) {}

  std::size_t num_vertices() const noexcept { return head_.size(); }

  /// Adds u -> v with capacity `cap` and v -> u with capacity `reverse_cap`.
  void add_arc(std::size_t u, std::size_t v, Cap cap, Cap reverse_cap = 0) {
    push_arc(u, v, cap);
    push_arc(v, u, reverse_cap);
  }

  Cap solve(std::size_t source, std::size_t sink) {
    Cap total = 0;
    level_.assign(num_vertices(), -1);
    cursor_.assign(num_vertices(), -1);
    while (build_levels(source, sink)) {
      for (std::size_t v = 0; v < num_vertices(); ++v) cursor_[v] = head_[v];
      total += blocking_flow(source, sink);
    }
    return total;
  }

  /// After solve(): vertices reachable from `source` in the residual graph.
  /// This is the source side of the minimal minimum cut.
  std::vector<char> reachable_from(std::size_t source) const {
    std::vector<char> seen(num_vertices(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto a = head_[u]; a >= 0; a = next_[a]) {
        if (residual_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

  /// After solve(): vertices that can reach `sink` in the residual graph. Its
  /// complement is the source side of the maximal minimum cut.
  std::vector<char> reaching(std::size_t sink) const {
    std::vector<char> seen(num_vertices(), 0);
    std::vector<std::size_t> stack{sink};
    seen[sink] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto a = head_[v]; a >= 0; a = next_[a]) {
        // a is v -> x; the arc x -> v is a ^ 1.
        const auto x = to_[a];
        if (residual_[a ^ 1] > 0 && !seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
    return seen;
  }

 private:
  void push_arc(std::size_t u, std::size_t v, Cap cap) {
    to_.push_back(v);
    residual_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<std::int64_t>(to_.size() - 1);
  }

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto u = queue[i];
      for (auto a = head_[u]; a >= 0; a = next_[a]) {
        if (residual_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Cap blocking_flow(std::size_t source, std::size_t sink) {
    Cap total = 0;
    std::vector<std::int64_t> path;  // arcs from source to the current vertex
    std::size_t u = source;
    while (true) {
      if (u == sink) {
        Cap push = residual_[path.front()];
        for (auto a : path) push = std::min(push, residual_[a]);
        std::size_t cut = path.size();
        for (std::size_t i = 0; i < path.size(); ++i) {
          residual_[path[i]] -= push;
          residual_[path[i] ^ 1] += push;
          if (residual_[path[i]] == 0 && cut == path.size()) cut = i;
        }
        total += push;
        path.resize(cut);
        u = path.empty() ? source : to_[path.back()];
        continue;
      }
      auto& a = cursor_[u];
      while (a >= 0 && !(residual_[a] > 0 && level_[to_[a]] == level_[u] + 1)) a = next_[a];
      if (a >= 0) {
        path.push_back(a);
        u = to_[a];
        continue;
      }
      if (u == source) break;
      level_[u] = -1;
      path.pop_back();
      u = path.empty() ? source : to_[path.back()];
      cursor_[u] = next_[cursor_[u]];
    }
    return total;
  }

  std::vector<std::int64_t> head_;
  std::vector<std::size_t> to_;
  std::vector<Cap> residual_;
  std::vector<std::int64_t> next_;
  std::vector<int> level_;
  std::vector<std::int64_t> cursor_;
};

}  // namespace negdsd
