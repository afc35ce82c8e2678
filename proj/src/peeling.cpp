#include "negdsd/peeling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <queue>
#include <string>
#include <utility>

#include "negdsd/errors.hpp"

namespace negdsd {

namespace {

void check_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw NonPositiveC("C must be a finite value > 0, got " + std::to_string(c));
}

}  // namespace

double PeelScoring::value_of(const DsdResult& r) const {
  if (mode == ScoreMode::kObjective) {
    return params.evaluate(r.wpos_total, r.wneg_total, r.size());
  }
  return r.net_density;
}

PeelOrder peel_order(const SignedGraph& g, double c, double neg_scale) {
  check_c(c);
  const std::size_t n = g.num_nodes();
  if (n == 0) throw EmptySet("cannot peel a graph with no nodes");

  std::vector<double> dpos(n), dneg(n), score(n);
  for (NodeId u = 0; u < n; ++u) {
    dpos[u] = g.deg_pos(u);
    dneg[u] = g.deg_neg(u);
    score[u] = c * dpos[u] - neg_scale * dneg[u];
  }

  // Min-heap on (score, id) with lazy invalidation: an entry is live only if
  // its score still matches the node's current score.
  using Entry = std::pair<double, NodeId>;
  std::vector<Entry> storage;
  storage.reserve(n + 2 * g.num_edges());
  for (NodeId u = 0; u < n; ++u) storage.emplace_back(score[u], u);
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap(std::greater<>{}, std::move(storage));

  std::vector<char> removed(n, 0);
  PeelOrder order;
  order.removal_sequence.reserve(n);
  order.score_at_removal.reserve(n);
  while (!heap.empty()) {
    const auto [s, v] = heap.top();
    heap.pop();
    if (removed[v] || s != score[v]) continue;
    removed[v] = 1;
    order.removal_sequence.push_back(v);
    order.score_at_removal.push_back(s);
    for (const auto& nb : g.neighbors(v)) {
      const NodeId u = nb.node;
      if (u == v || removed[u]) continue;
      const auto& e = g.edges()[nb.edge];
      dpos[u] -= e.wpos;
      dneg[u] -= e.wneg;
      score[u] = c * dpos[u] - neg_scale * dneg[u];
      heap.emplace(score[u], u);
    }
  }
  return order;
}

DsdResult best_prefix(const SignedGraph& g, const PeelOrder& order, const PeelScoring& scoring) {
  const std::size_t n = g.num_nodes();
  const auto& seq = order.removal_sequence;
  if (seq.size() != n || n == 0) throw BadParameters("peel order does not cover the node set");
  std::vector<char> alive(n, 0);
  for (NodeId v : seq) {
    if (v >= n || alive[v]) throw BadParameters("peel order is not a permutation");
    alive[v] = 1;
  }

  auto score = [&](double wp, double wn, std::size_t size) {
    if (scoring.mode == ScoreMode::kObjective) return scoring.params.evaluate(wp, wn, size);
    return (wp - wn) / static_cast<double>(size);
  };

  double wp = g.total_pos();
  double wn = g.total_neg();
  double best = score(wp, wn, n);
  std::size_t best_removed = 0;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    const NodeId v = seq[step];
    for (const auto& nb : g.neighbors(v)) {
      if (!alive[nb.node]) continue;
      const auto& e = g.edges()[nb.edge];
      wp -= e.wpos;
      wn -= e.wneg;
    }
    alive[v] = 0;
    const double s = score(wp, wn, n - step - 1);
    if (s >= best - kTieTolerance) {
      best = std::max(best, s);
      best_removed = step + 1;
    }
  }

  std::vector<NodeId> nodes(seq.begin() + static_cast<std::ptrdiff_t>(best_removed), seq.end());
  const bool objective = scoring.mode == ScoreMode::kObjective;
  auto r = make_result(g, std::move(nodes), Algorithm::kPeel, false, objective ? &scoring.params : nullptr);
  r.c_used = scoring.c;
  return r;
}

DsdResult peel(const SignedGraph& g, const PeelScoring& scoring) {
  const double neg_scale = scoring.mode == ScoreMode::kObjective ? scoring.params.risk_weight() : 1.0;
  return best_prefix(g, peel_order(g, scoring.c, neg_scale), scoring);
}

DsdResult c_sweep(const SignedGraph& g, std::span<const double> c_list, const PeelScoring& scoring) {
  if (c_list.empty()) throw EmptyCList("c_sweep needs at least one C value");
  for (double c : c_list) check_c(c);

  std::vector<double> cs(c_list.begin(), c_list.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  std::vector<std::future<DsdResult>> runs;
  runs.reserve(cs.size());
  for (double c : cs) {
    PeelScoring s = scoring;
    s.c = c;
    runs.push_back(std::async(cs.size() > 1 ? std::launch::async : std::launch::deferred,
                              [&g, s] { return peel(g, s); }));
  }

  std::optional<DsdResult> best;
  double best_value = 0.0;
  for (auto& run : runs) {
    auto r = run.get();
    const double v = scoring.value_of(r);
    if (!best || v > best_value + kTieTolerance) {
      best_value = v;
      best = std::move(r);
    }
  }
  best->algorithm = Algorithm::kCSweep;
  return *std::move(best);
}

}  // namespace negdsd
