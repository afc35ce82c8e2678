#include "negdsd/signed_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "negdsd/errors.hpp"
#include "negdsd/result.hpp"

namespace negdsd {

namespace {

void check_magnitude(double w, const char* field) {
  if (!std::isfinite(w) || w < 0.0) {
    throw NegativeMagnitude(std::string(field) + " must be a finite value >= 0, got " + std::to_string(w));
  }
}

}  // namespace

SignedGraph SignedGraph::build(std::size_t n, std::span<const SignedEdge> raw) {
  std::vector<SignedEdge> sorted;
  sorted.reserve(raw.size());
  for (const auto& e : raw) {
    check_magnitude(e.wpos, "wpos");
    check_magnitude(e.wneg, "wneg");
    if (e.u >= n || e.v >= n) {
      throw UnknownNode("edge endpoint out of range for " + std::to_string(n) + " nodes");
    }
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.wpos, e.wneg});
  }
  std::sort(sorted.begin(), sorted.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  SignedGraph g;
  for (const auto& e : sorted) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      g.edges_.back().wpos += e.wpos;
      g.edges_.back().wneg += e.wneg;
    } else {
      g.edges_.push_back(e);
    }
  }

  g.deg_pos_.assign(n, 0.0);
  g.deg_neg_.assign(n, 0.0);
  std::vector<std::size_t> count(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++count[e.u];
    if (!e.is_loop()) ++count[e.v];
    g.total_pos_ += e.wpos;
    g.total_neg_ += e.wneg;
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + count[u];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
    const auto& e = g.edges_[i];
    g.adjacency_[cursor[e.u]++] = {e.v, i};
    g.deg_pos_[e.u] += e.wpos;
    g.deg_neg_[e.u] += e.wneg;
    if (!e.is_loop()) g.adjacency_[cursor[e.v]++] = {e.u, i};
    g.deg_pos_[e.v] += e.wpos;
    g.deg_neg_[e.v] += e.wneg;
  }
  return g;
}

double SignedGraph::max_deg_neg() const noexcept {
  double best = 0.0;
  for (double d : deg_neg_) best = std::max(best, d);
  return best;
}

bool SignedGraph::net_nonnegative() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.wpos >= e.wneg; });
}

SignedGraph build_signed_graph(std::span<const SignedEdge> raw) {
  std::size_t n = 0;
  for (const auto& e : raw) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  return SignedGraph::build(n, raw);
}

InducedWeights induced_weights(const SignedGraph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw EmptySet("induced_weights needs a nonempty node set");
  std::vector<char> member(g.num_nodes(), 0);
  InducedWeights out;
  for (NodeId u : nodes) {
    if (u >= g.num_nodes()) throw UnknownNode("node " + std::to_string(u) + " is not in the graph");
    if (!member[u]) {
      member[u] = 1;
      ++out.size;
    }
  }
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (!member[u]) continue;
    for (const auto& nb : g.neighbors(u)) {
      if (nb.node >= u && member[nb.node]) {
        const auto& e = g.edges()[nb.edge];
        out.wpos += e.wpos;
        out.wneg += e.wneg;
      }
    }
  }
  return out;
}

ObjectiveParams::ObjectiveParams(double lambda1, double lambda2, double risk_weight)
    : lambda1_(lambda1), lambda2_(lambda2), risk_weight_(risk_weight) {
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2) || !std::isfinite(risk_weight)) {
    throw BadParameters("objective parameters must be finite");
  }
  if (lambda2 == 0.0) throw ZeroDenominator("lambda2 must be > 0; f is undefined on edgeless sets otherwise");
  if (lambda1 < 0.0 || lambda2 < 0.0) throw BadParameters("lambda1 must be >= 0 and lambda2 > 0");
  if (risk_weight <= 0.0) throw BadParameters("risk weight B must be > 0");
}

ObjectiveParams ObjectiveParams::from_ratio(double rho, double lambda, double risk_weight) {
  return ObjectiveParams(rho * lambda, lambda, risk_weight);
}

double ObjectiveParams::upper_bound(const SignedGraph& g) const noexcept {
  return (g.total_pos() + lambda1_ * static_cast<double>(g.num_nodes())) / lambda2_;
}

double objective_f(const SignedGraph& g, std::span<const NodeId> nodes, const ObjectiveParams& params) {
  const auto w = induced_weights(g, nodes);
  return params.evaluate(w.wpos, w.wneg, w.size);
}

TildeGraph tilde_weights(const SignedGraph& g, double q, double risk_weight) {
  if (!(q >= 0.0) || !std::isfinite(q)) throw BadParameters("query value q must be finite and >= 0");
  if (!(risk_weight > 0.0) || !std::isfinite(risk_weight)) throw BadParameters("risk weight B must be > 0");
  TildeGraph out;
  std::vector<SignedEdge> reweighted;
  reweighted.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    const double w = tilde_weight(e, q, risk_weight);
    if (w < 0.0) out.all_nonnegative = false;
    reweighted.push_back({e.u, e.v, std::max(w, 0.0), std::max(-w, 0.0)});
  }
  out.graph = SignedGraph::build(g.num_nodes(), reweighted);
  return out;
}

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::kPeel: return "peel";
    case Algorithm::kCSweep: return "c-sweep";
    case Algorithm::kExactFlow: return "exact-flow";
    case Algorithm::kBinarySearch: return "binary-search";
    case Algorithm::kBruteForce: return "brute-force";
    case Algorithm::kShiftBaseline: return "shift-baseline";
  }
  return "unknown";
}

DsdResult make_result(const SignedGraph& g, std::vector<NodeId> nodes, Algorithm algorithm, bool exact,
                      const ObjectiveParams* params) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const auto w = induced_weights(g, nodes);
  DsdResult r;
  r.nodes = std::move(nodes);
  r.wpos_total = w.wpos;
  r.wneg_total = w.wneg;
  r.net_density = w.net_density();
  if (params) r.f_value = params->evaluate(w.wpos, w.wneg, w.size);
  r.exact = exact;
  r.algorithm = algorithm;
  return r;
}

}  // namespace negdsd
