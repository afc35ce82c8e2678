#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "negdsd/signed_graph.hpp"

namespace negdsd {

/// Edge of an uncertain graph summarized by the first two moments of its
/// reward: mu (expected reward) and sigma2 (risk).
struct UncertainEdge {
  NodeId u = 0;
  NodeId v = 0;
  double mu = 0.0;
  double sigma2 = 0.0;
};

/// Edge that materializes with probability p and then pays w.
struct BernoulliEdge {
  NodeId u = 0;
  NodeId v = 0;
  double p = 1.0;
  double w = 0.0;
};

struct Moments {
  double mu = 0.0;
  double sigma2 = 0.0;
};

/// mu = w p, sigma2 = w^2 p (1 - p). Throws OutOfRange unless 0 < p <= 1 and
/// w >= 0.
Moments bernoulli_moments(double p, double w);

/// Uncertain graph; pairs that never appear are treated as absent edges.
class UncertainGraph {
 public:
  UncertainGraph() = default;

  /// Throws OutOfRange on negative or non-finite moments and UnknownNode on an
  /// endpoint >= n.
  UncertainGraph(std::size_t n, std::vector<UncertainEdge> edges);

  static UncertainGraph from_bernoulli(std::size_t n, std::span<const BernoulliEdge> edges);

  std::size_t num_nodes() const noexcept { return n_; }
  std::span<const UncertainEdge> edges() const noexcept { return edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<UncertainEdge> edges_;
};

/// Each edge becomes (wpos = mu, wneg = sigma2). B is applied later through
/// ObjectiveParams, so one conversion serves every B.
SignedGraph uncertain_to_signed(const UncertainGraph& u);

struct RiskReport {
  double avg_expected_reward = 0.0;
  double avg_risk = 0.0;
  std::size_t size = 0;
};

/// Induced mu and sigma2 totals of `nodes`, each divided by |nodes|. Throws
/// EmptySet or UnknownNode.
RiskReport risk_profile(const UncertainGraph& u, std::span<const NodeId> nodes);

struct CoStarEdge {
  double p = 0.0;
  double w = 0.0;
};

inline constexpr std::size_t kTmdbTopMovies = 5;

/// Edge between two actors from their filmographies: p is the Jaccard
/// coefficient of the two movie sets, w = sum_j s_j / 2^j over the (at most
/// five) most popular shared movies, s_0 >= s_1 >= ... Returns nullopt when
/// the actors share no movie. Throws EmptyFilmography when both sets are
/// empty and OutOfRange when a shared movie has no score in [1, 10].
std::optional<CoStarEdge> tmdb_edge(const std::set<std::string>& movies_u, const std::set<std::string>& movies_v,
                                    const std::map<std::string, double>& popularity);

}  // namespace negdsd
