#include "negdsd/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "negdsd/errors.hpp"
#include "negdsd/exact.hpp"

namespace negdsd::testkit {

namespace {

SignedEdge net_edge(NodeId u, NodeId v, double w) { return {u, v, std::max(w, 0.0), std::max(-w, 0.0)}; }

}  // namespace

SignedGraph gen_bad_peeling(std::size_t n, double eps) {
  if (n < 7 || n % 3 != 1) throw BadParameters("bad-peeling needs n >= 7 with n = 1 (mod 3)");
  if (!(eps > 0.0 && eps < 1.0)) throw BadParameters("bad-peeling needs 0 < eps < 1");
  using L = BadPeelingLayout;
  const double w = static_cast<double>(n - 4) / 3.0;

  std::vector<SignedEdge> edges{
      net_edge(L::kA, L::kB, eps),     net_edge(L::kA, L::kC, eps),     net_edge(L::kB, L::kC, eps),
      net_edge(L::kA, L::kCenter, w),  net_edge(L::kB, L::kCenter, w),  net_edge(L::kC, L::kCenter, w),
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = static_cast<NodeId>(L::kFirstFiller + i);
    edges.push_back(net_edge(L::kCenter, f, -1.0));
    if (i + 1 < n) edges.push_back(net_edge(f, f + 1, -1.0));
  }
  return SignedGraph::build(n + 4, edges);
}

double bad_peeling_optimum(std::size_t n, double eps) {
  const double w = static_cast<double>(n - 4) / 3.0;
  return (3.0 * w + 3.0 * eps) / 4.0;
}

SignedGraph gen_two_component(std::size_t r, std::size_t n, std::uint64_t seed) {
  if (r < 2) throw BadParameters("two-component needs a clique of at least 2 nodes");
  std::vector<SignedEdge> edges;
  for (NodeId u = 0; u < r; ++u) {
    for (NodeId v = u + 1; v < r; ++v) edges.push_back({u, v, 1.0, 0.0});
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const auto base = static_cast<NodeId>(r);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const bool positive = coin(rng);
      const bool negative = coin(rng);
      if (positive || negative) {
        edges.push_back({base + i, base + j, positive ? 1.0 : 0.0, negative ? 1.0 : 0.0});
      }
    }
  }
  return SignedGraph::build(r + n, edges);
}

SignedGraph gen_shift_failure(std::size_t n, double delta, double eps) {
  if (n < 3) throw BadParameters("shift-failure needs a clique of at least 3 nodes");
  if (!(delta > 0.0) || !(eps > 0.0 && eps < delta)) throw BadParameters("shift-failure needs 0 < eps < delta");
  if (!(static_cast<double>(n - 1) * (delta - eps) / 2.0 > 1.0 + delta)) {
    throw BadParameters("shift-failure needs (n - 1)(delta - eps) / 2 > 1 + delta");
  }
  std::vector<SignedEdge> edges{
      {0, 1, 1.0, 0.0}, {0, 2, 1.0, 0.0}, {1, 2, 1.0, 0.0}, {3, 4, 0.0, delta},
  };
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({5 + u, 5 + v, 0.0, eps});
  }
  return SignedGraph::build(n + 5, edges);
}

DsdResult shift_baseline(const SignedGraph& g) {
  if (g.num_nodes() == 0) throw EmptySet("shift baseline needs at least one node");
  double most_negative = 0.0;
  for (const auto& e : g.edges()) most_negative = std::min(most_negative, e.net());
  const double shift = -most_negative;

  std::vector<SignedEdge> shifted;
  shifted.reserve(g.num_edges());
  for (const auto& e : g.edges()) shifted.push_back(net_edge(e.u, e.v, std::max(e.net() + shift, 0.0)));
  const auto solved = exact_dsd(SignedGraph::build(g.num_nodes(), shifted));

  auto r = make_result(g, solved.nodes, Algorithm::kShiftBaseline, shift == 0.0 && solved.exact);
  return r;
}

}  // namespace negdsd::testkit
