#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace negdsd {

/// Dense node index, 0..n-1. External string labels are mapped at ingestion
/// (see io.hpp).
using NodeId = std::uint32_t;

/// Absolute tolerance used whenever two densities or objective values are
/// compared for a tie.
inline constexpr double kTieTolerance = 1e-12;

/// One unordered node pair carrying a nonnegative positive weight and a
/// nonnegative negative magnitude. The sign lives in the field, never in the
/// value. u == v is a loop.
struct SignedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double wpos = 0.0;
  double wneg = 0.0;

  double net() const noexcept { return wpos - wneg; }
  bool is_loop() const noexcept { return u == v; }

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
  NodeId node;
  std::uint32_t edge;  // index into SignedGraph::edges()
};

/// Immutable undirected signed graph with at most one edge per unordered pair.
///
/// Degrees count a loop twice, induced weights count it once, so that
/// sum_u d(u) == 2 * (w+(V) - w-(V)) holds with loops present.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Collapses parallel raw edges componentwise. Throws NegativeMagnitude on a
  /// negative or non-finite weight and UnknownNode on an endpoint >= n.
  static SignedGraph build(std::size_t n, std::span<const SignedEdge> raw);

  std::size_t num_nodes() const noexcept { return deg_pos_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Collapsed edges, u <= v, sorted by (u, v).
  std::span<const SignedEdge> edges() const noexcept { return edges_; }

  /// Incident edges of `u`; a loop on `u` is listed once with node == u.
  std::span<const Neighbor> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  double deg_pos(NodeId u) const noexcept { return deg_pos_[u]; }
  double deg_neg(NodeId u) const noexcept { return deg_neg_[u]; }
  double degree(NodeId u) const noexcept { return deg_pos_[u] - deg_neg_[u]; }

  double total_pos() const noexcept { return total_pos_; }
  double total_neg() const noexcept { return total_neg_; }

  /// Largest negative degree over all nodes (Delta in the peeling bound).
  double max_deg_neg() const noexcept;

  /// True when every pair's net weight wpos - wneg is >= 0.
  bool net_nonnegative() const noexcept;

 private:
  std::vector<SignedEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> deg_pos_;
  std::vector<double> deg_neg_;
  double total_pos_ = 0.0;
  double total_neg_ = 0.0;
};

/// Builds with n = 1 + largest endpoint (n = 0 for an empty list).
SignedGraph build_signed_graph(std::span<const SignedEdge> raw);

struct InducedWeights {
  double wpos = 0.0;
  double wneg = 0.0;
  std::size_t size = 0;

  double net() const noexcept { return wpos - wneg; }
  double net_density() const noexcept { return (wpos - wneg) / static_cast<double>(size); }
};

/// Weights induced by the node set `nodes` (duplicates ignored). Throws
/// EmptySet or UnknownNode.
InducedWeights induced_weights(const SignedGraph& g, std::span<const NodeId> nodes);

/// Parameters of f(S) = (w+(S) + lambda1 |S|) / (B w-(S) + lambda2 |S|).
class ObjectiveParams {
 public:
  ObjectiveParams() = default;

  /// Throws ZeroDenominator when lambda2 == 0 and BadParameters on any other
  /// out-of-range value (lambda1 < 0, lambda2 < 0, B <= 0, non-finite).
  ObjectiveParams(double lambda1, double lambda2, double risk_weight = 1.0);

  /// lambda1 = rho * lambda, lambda2 = lambda. rho >= 1 favors larger sets.
  static ObjectiveParams from_ratio(double rho, double lambda, double risk_weight = 1.0);

  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }
  /// B, the multiplier on the negative induced weight.
  double risk_weight() const noexcept { return risk_weight_; }
  double rho() const noexcept { return lambda1_ / lambda2_; }

  /// f evaluated from induced totals; size must be >= 1.
  double evaluate(double wpos, double wneg, std::size_t size) const noexcept {
    const auto k = static_cast<double>(size);
    return (wpos + lambda1_ * k) / (risk_weight_ * wneg + lambda2_ * k);
  }

  /// (sum_e w+(e) + lambda1 n) / lambda2, an upper bound on f over all
  /// nonempty sets.
  double upper_bound(const SignedGraph& g) const noexcept;

 private:
  double lambda1_ = 1.0;
  double lambda2_ = 1.0;
  double risk_weight_ = 1.0;
};

double objective_f(const SignedGraph& g, std::span<const NodeId> nodes, const ObjectiveParams& params);

/// w+(e) - q * B * w-(e).
inline double tilde_weight(const SignedEdge& e, double q, double risk_weight) noexcept {
  return e.wpos - q * risk_weight * e.wneg;
}

struct TildeGraph {
  /// Single-weight view stored as (max(w,0), max(-w,0)) per pair.
  SignedGraph graph;
  /// Every reweighted edge is >= 0, so exact flow-based decisions apply.
  bool all_nonnegative = true;
};

/// Reweights every edge to w+(e) - q B w-(e). Throws BadParameters on q < 0
/// or B <= 0.
TildeGraph tilde_weights(const SignedGraph& g, double q, double risk_weight);

}  // namespace negdsd
