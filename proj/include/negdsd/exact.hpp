#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "negdsd/peeling.hpp"
#include "negdsd/result.hpp"
#include "negdsd/signed_graph.hpp"

namespace negdsd {

/// Uniform factor turning every weight into an integer. `exact` is false when
/// no factor below 2^32 works and weights were rounded to a fixed-point grid.
struct IntegerScale {
  std::int64_t factor = 1;
  bool exact = true;
};

/// Smallest power of 10 or of 2 below 2^32 that makes every value integral
/// (to 1e-9 of each value); otherwise the finest fixed-point grid up to 1e-9.
IntegerScale choose_integer_scale(std::span<const double> values);

struct DecisionOutcome {
  bool feasible = false;
  /// Nonempty iff feasible; density >= the queried threshold.
  std::vector<NodeId> witness;
  /// False when weights had to be rounded to a fixed-point grid.
  bool exact = true;
};

/// Is there a nonempty S with w(S)/|S| >= threshold? One minimum cut on the
/// source/sink network. Edge weights are the pairs' net weights; throws
/// NegativeWeight if any is < 0. The witness is the largest set attaining
/// max_S (w(S) - threshold |S|).
DecisionOutcome dsd_decision(const SignedGraph& g, double threshold);

/// Exact densest subgraph on nonnegative net weights. Returns the largest
/// densest set (the union of all maximizers). Throws NegativeWeight or
/// EmptySet.
DsdResult exact_dsd(const SignedGraph& g);

struct SearchTrace {
  std::size_t iterations = 0;
  std::vector<double> lo;  // bracket after each iteration
  std::vector<double> hi;
  std::size_t heuristic_queries = 0;
  /// True iff every query was answered by the flow decision.
  bool exact = true;
};

struct SearchOutcome {
  DsdResult result;
  SearchTrace trace;
};

inline constexpr std::size_t kSearchIterationCap = 64;

/// Binary search on f over [0, params.upper_bound(g)]. Each query q asks for
/// a set of density >= q*lambda2 - lambda1 on tilde_weights(g, q, B): exactly
/// by dsd_decision while all reweighted edges are >= 0, otherwise by c_sweep
/// (and then the result is flagged inexact). Stops once
/// hi - lo <= eps * max(1, hi) or after 64 iterations. Throws BadParameters
/// on eps <= 0 and EmptySet on an empty graph.
SearchOutcome binary_search_objective(const SignedGraph& g, const ObjectiveParams& params, double eps = 1e-9,
                                      std::span<const double> c_list = kDefaultCList);

enum class BruteForceMode { kDensity, kObjective };

inline constexpr std::size_t kBruteForceMaxNodes = 22;

/// Enumerates every nonempty subset; ties go to the lexicographically
/// smallest sorted node list. Throws TooLarge above 22 nodes, EmptySet on an
/// empty graph and BadParameters when objective mode has no params.
DsdResult brute_force(const SignedGraph& g, BruteForceMode mode, const std::optional<ObjectiveParams>& params = {});

}  // namespace negdsd
