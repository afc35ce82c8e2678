#include "negdsd/uncertain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <string>

#include "negdsd/errors.hpp"

namespace negdsd {

Moments bernoulli_moments(double p, double w) {
  if (!(p > 0.0 && p <= 1.0)) throw OutOfRange("edge probability must lie in (0, 1], got " + std::to_string(p));
  if (!(w >= 0.0) || !std::isfinite(w)) throw OutOfRange("edge reward must be finite and >= 0, got " + std::to_string(w));
  return {w * p, w * w * p * (1.0 - p)};
}

UncertainGraph::UncertainGraph(std::size_t n, std::vector<UncertainEdge> edges) : n_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw UnknownNode("uncertain edge endpoint out of range");
    if (!(e.mu >= 0.0) || !std::isfinite(e.mu)) throw OutOfRange("expected reward must be finite and >= 0");
    if (!(e.sigma2 >= 0.0) || !std::isfinite(e.sigma2)) throw OutOfRange("risk must be finite and >= 0");
  }
}

UncertainGraph UncertainGraph::from_bernoulli(std::size_t n, std::span<const BernoulliEdge> edges) {
  std::vector<UncertainEdge> converted;
  converted.reserve(edges.size());
  for (const auto& e : edges) {
    const auto m = bernoulli_moments(e.p, e.w);
    converted.push_back({e.u, e.v, m.mu, m.sigma2});
  }
  return UncertainGraph(n, std::move(converted));
}

SignedGraph uncertain_to_signed(const UncertainGraph& u) {
  std::vector<SignedEdge> raw;
  raw.reserve(u.edges().size());
  for (const auto& e : u.edges()) raw.push_back({e.u, e.v, e.mu, e.sigma2});
  return SignedGraph::build(u.num_nodes(), raw);
}

RiskReport risk_profile(const UncertainGraph& u, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw EmptySet("risk_profile needs a nonempty node set");
  std::vector<char> member(u.num_nodes(), 0);
  RiskReport r;
  for (NodeId v : nodes) {
    if (v >= u.num_nodes()) throw UnknownNode("node " + std::to_string(v) + " is not in the graph");
    if (!member[v]) {
      member[v] = 1;
      ++r.size;
    }
  }
  double mu = 0.0;
  double sigma2 = 0.0;
  for (const auto& e : u.edges()) {
    if (member[e.u] && member[e.v]) {
      mu += e.mu;
      sigma2 += e.sigma2;
    }
  }
  r.avg_expected_reward = mu / static_cast<double>(r.size);
  r.avg_risk = sigma2 / static_cast<double>(r.size);
  return r;
}

std::optional<CoStarEdge> tmdb_edge(const std::set<std::string>& movies_u, const std::set<std::string>& movies_v,
                                    const std::map<std::string, double>& popularity) {
  std::vector<std::string> shared;
  std::set_intersection(movies_u.begin(), movies_u.end(), movies_v.begin(), movies_v.end(),
                        std::back_inserter(shared));
  const std::size_t union_size = movies_u.size() + movies_v.size() - shared.size();
  if (union_size == 0) throw EmptyFilmography("both actors have empty filmographies");
  if (shared.empty()) return std::nullopt;

  std::vector<double> scores;
  scores.reserve(shared.size());
  for (const auto& m : shared) {
    const auto it = popularity.find(m);
    if (it == popularity.end()) throw OutOfRange("no popularity score for movie '" + m + "'");
    if (!(it->second >= 1.0 && it->second <= 10.0)) {
      throw OutOfRange("popularity of '" + m + "' must lie in [1, 10], got " + std::to_string(it->second));
    }
    scores.push_back(it->second);
  }
  std::sort(scores.begin(), scores.end(), std::greater<>());

  CoStarEdge edge;
  edge.p = static_cast<double>(shared.size()) / static_cast<double>(union_size);
  const std::size_t k = std::min(shared.size(), kTmdbTopMovies);
  double discount = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    edge.w += scores[j] * discount;
    discount /= 2.0;
  }
  return edge;
}

}  // namespace negdsd
