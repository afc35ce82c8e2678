#pragma once

#include <array>
#include <span>
#include <vector>

#include "negdsd/result.hpp"
#include "negdsd/signed_graph.hpp"

namespace negdsd {

/// Removal order of a peel: removal_sequence[0] is removed first. The prefix
/// H_i is the set of the last i entries.
struct PeelOrder {
  std::vector<NodeId> removal_sequence;
  std::vector<double> score_at_removal;
};

enum class ScoreMode {
  kNetDensity,  // (w+(H) - w-(H)) / |H|
  kObjective,   // f(H) with B applied
};

struct PeelScoring {
  ScoreMode mode = ScoreMode::kNetDensity;
  double c = 1.0;
  ObjectiveParams params;

  static PeelScoring net_density(double c = 1.0) { return {ScoreMode::kNetDensity, c, {}}; }
  static PeelScoring objective(const ObjectiveParams& params, double c = 1.0) {
    return {ScoreMode::kObjective, c, params};
  }

  /// Value this scoring assigns to a result (net density or f).
  double value_of(const DsdResult& r) const;
};

inline constexpr std::array<double, 7> kDefaultCList{0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0};

/// Repeatedly removes the node minimizing c*deg+_H(v) - neg_scale*deg-_H(v),
/// ties broken by smallest id. c = 1, neg_scale = 1 is plain peeling.
/// Throws NonPositiveC, or EmptySet on a graph with no nodes.
PeelOrder peel_order(const SignedGraph& g, double c, double neg_scale = 1.0);

/// Best prefix of `order` under `scoring`; ties go to the smaller prefix.
/// Evaluated in a single pass. Throws BadParameters if `order` is not a
/// permutation of the node set.
DsdResult best_prefix(const SignedGraph& g, const PeelOrder& order, const PeelScoring& scoring);

/// peel_order + best_prefix with scoring.c. In objective mode the negative
/// degrees in the peel score are scaled by B.
DsdResult peel(const SignedGraph& g, const PeelScoring& scoring);

/// Runs peel for every c in `c_list` (scoring.c is ignored) and keeps the best
/// value; ties go to the smaller c. Runs are independent and may execute
/// concurrently. Throws EmptyCList or NonPositiveC.
DsdResult c_sweep(const SignedGraph& g, std::span<const double> c_list, const PeelScoring& scoring);

}  // namespace negdsd
