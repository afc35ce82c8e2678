#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "negdsd/signed_graph.hpp"

namespace negdsd {

enum class Algorithm {
  kPeel,
  kCSweep,
  kExactFlow,
  kBinarySearch,
  kBruteForce,
  kShiftBaseline,
};

std::string_view to_string(Algorithm algorithm) noexcept;

struct DsdResult {
  std::vector<NodeId> nodes;  // sorted, nonempty
  double net_density = 0.0;
  double wpos_total = 0.0;
  double wneg_total = 0.0;
  std::optional<double> f_value;
  bool exact = false;
  Algorithm algorithm = Algorithm::kPeel;
  std::optional<double> c_used;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Scores `nodes` on `g` and packages the result. f_value is filled when
/// `params` is given.
DsdResult make_result(const SignedGraph& g, std::vector<NodeId> nodes, Algorithm algorithm, bool exact,
                      const ObjectiveParams* params = nullptr);

}  // namespace negdsd
