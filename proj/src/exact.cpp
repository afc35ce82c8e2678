#include "negdsd/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "negdsd/errors.hpp"
#include "negdsd/max_flow.hpp"

namespace negdsd {

namespace {

using Wide = __int128;

constexpr double kMaxExactDouble = 9007199254740992.0;  // 2^53

/// Net weights scaled to integers. Loops are kept per node: they count once in
/// w(S) and twice in the degree.
struct ScaledGraph {
  struct Pair {
    NodeId u;
    NodeId v;
    std::int64_t w;
  };
  std::vector<Pair> pairs;  // non-loop, w > 0
  std::vector<std::int64_t> loop;
  std::vector<Wide> degree;
  Wide total = 0;
  IntegerScale scale;
};

ScaledGraph scale_graph(const SignedGraph& g) {
  std::vector<double> net;
  net.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    if (e.net() < 0.0) {
      throw NegativeWeight("flow-based solvers need nonnegative weights; pair (" + std::to_string(e.u) + ", " +
                           std::to_string(e.v) + ") has net weight " + std::to_string(e.net()));
    }
    net.push_back(e.net());
  }
  ScaledGraph sg;
  sg.scale = choose_integer_scale(net);
  sg.loop.assign(g.num_nodes(), 0);
  sg.degree.assign(g.num_nodes(), 0);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double scaled = net[i] * static_cast<double>(sg.scale.factor);
    if (scaled > 9.2e18) throw TooLarge("edge weight too large for integer flow capacities");
    const auto w = static_cast<std::int64_t>(std::llround(scaled));
    const auto& e = g.edges()[i];
    sg.total += w;
    if (e.is_loop()) {
      sg.loop[e.u] += w;
      sg.degree[e.u] += 2 * static_cast<Wide>(w);
    } else if (w > 0) {
      sg.pairs.push_back({e.u, e.v, w});
      sg.degree[e.u] += w;
      sg.degree[e.v] += w;
    }
  }
  return sg;
}

Wide scaled_weight(const ScaledGraph& sg, const std::vector<char>& member) {
  Wide w = 0;
  for (std::size_t v = 0; v < member.size(); ++v) {
    if (member[v]) w += sg.loop[v];
  }
  for (const auto& p : sg.pairs) {
    if (member[p.u] && member[p.v]) w += p.w;
  }
  return w;
}

/// Maximizes Q w(S) - P |S| over all S (including the empty set) with one
/// minimum cut. Node v gets source capacity Q d(v) - 2P when positive and sink
/// capacity 2P - Q d(v) otherwise; every pair gets Q w in both directions.
/// Then cut(S) = const - 2 (Q w(S) - P |S|).
struct Selection {
  Wide twice_value = 0;
  std::vector<char> maximal;  // union of all maximizers
};

template <typename Cap>
Selection select_with(const ScaledGraph& sg, Wide p, Wide q) {
  const std::size_t n = sg.degree.size();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  MaxFlow<Cap> flow(n + 2);
  Wide source_total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const Wide net = q * sg.degree[v] - 2 * p;
    if (net > 0) {
      flow.add_arc(source, v, static_cast<Cap>(net));
      source_total += net;
    } else if (net < 0) {
      flow.add_arc(v, sink, static_cast<Cap>(-net));
    }
  }
  for (const auto& pr : sg.pairs) {
    const auto cap = static_cast<Cap>(q * pr.w);
    flow.add_arc(pr.u, pr.v, cap, cap);
  }
  const Wide cut = flow.solve(source, sink);
  const auto reach = flow.reaching(sink);
  Selection sel;
  sel.twice_value = source_total - cut;
  sel.maximal.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) sel.maximal[v] = reach[v] ? 0 : 1;
  return sel;
}

Selection select(const ScaledGraph& sg, Wide p, Wide q) {
  Wide bound = 0;
  for (const auto& d : sg.degree) {
    const Wide net = q * d - 2 * p;
    bound += net < 0 ? -net : net;
  }
  for (const auto& pr : sg.pairs) bound += 2 * q * pr.w;
  if (bound < (Wide{1} << 62)) return select_with<std::int64_t>(sg, p, q);
  if (bound >= (Wide{1} << 125)) throw TooLarge("flow capacities exceed 125 bits");
  return select_with<Wide>(sg, p, q);
}

/// ceil(x * factor * k) for a finite x > 0, computed exactly from the binary
/// representation of x.
Wide ceil_scaled(double x, std::int64_t factor, std::size_t k) {
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  const int e = exp - 53;  // x = m * 2^e
  const Wide prod = static_cast<Wide>(m) * factor * static_cast<Wide>(k);
  if (e >= 0) return prod << e;
  const int shift = -e;
  if (shift >= 126) return 1;
  return (prod + (Wide{1} << shift) - 1) >> shift;
}

std::vector<NodeId> members(const std::vector<char>& mask) {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

}  // namespace

IntegerScale choose_integer_scale(std::span<const double> values) {
  constexpr double kUlp = std::numeric_limits<double>::epsilon();
  double largest = 0.0;
  for (double v : values) largest = std::max(largest, std::abs(v));

  std::vector<std::int64_t> candidates;
  for (std::int64_t s = 1; s < (std::int64_t{1} << 32); s *= 10) candidates.push_back(s);
  for (std::int64_t s = 2; s < (std::int64_t{1} << 32); s *= 2) candidates.push_back(s);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (auto s : candidates) {
    const auto sd = static_cast<double>(s);
    if (largest * sd > kMaxExactDouble) break;
    // Tolerance is relative to the unscaled value, widened to a few ulps of
    // the product so decimal inputs like 0.1 still register as integral.
    const bool integral = std::all_of(values.begin(), values.end(), [sd](double v) {
      const double x = v * sd;
      const double tol = std::max(1e-9 * std::max(1.0, std::abs(v)), 8.0 * kUlp * std::abs(x));
      return std::abs(x - std::nearbyint(x)) <= tol;
    });
    if (integral) return {s, true};
  }
  std::int64_t s = 1'000'000'000;
  while (s > 1 && largest * static_cast<double>(s) > kMaxExactDouble) s /= 10;
  return {s, false};
}

DecisionOutcome dsd_decision(const SignedGraph& g, double threshold) {
  if (std::isnan(threshold)) throw BadParameters("density threshold is NaN");
  const auto sg = scale_graph(g);
  DecisionOutcome out;
  out.exact = sg.scale.exact;
  const std::size_t n = g.num_nodes();
  if (n == 0) return out;
  if (threshold <= 0.0) {
    // Nonnegative weights: the whole node set has density >= 0 >= threshold.
    out.feasible = true;
    out.witness.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.witness[v] = static_cast<NodeId>(v);
    return out;
  }
  if (static_cast<long double>(threshold) * sg.scale.factor > static_cast<long double>(sg.total)) return out;

  // Densities are ratios a/k with k <= n, so "density >= threshold" is the same
  // question as "density >= smallest such ratio that is >= threshold".
  Wide best_a = ceil_scaled(threshold, sg.scale.factor, 1);
  Wide best_k = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    const Wide a = ceil_scaled(threshold, sg.scale.factor, k);
    if (a * best_k < best_a * static_cast<Wide>(k)) {
      best_a = a;
      best_k = static_cast<Wide>(k);
    }
  }
  const auto sel = select(sg, best_a, best_k);
  out.witness = members(sel.maximal);
  out.feasible = !out.witness.empty();
  return out;
}

DsdResult exact_dsd(const SignedGraph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw EmptySet("exact_dsd needs at least one node");
  const auto sg = scale_graph(g);

  // Dinkelbach iteration on exact rationals p/q: each round either certifies
  // p/q optimal (max value 0) or jumps to the strictly denser maximizer.
  std::vector<char> current(n, 1);
  Wide p = sg.total;
  Wide q = static_cast<Wide>(n);
  while (true) {
    auto sel = select(sg, p, q);
    if (sel.twice_value == 0) {
      if (std::any_of(sel.maximal.begin(), sel.maximal.end(), [](char c) { return c != 0; })) {
        current = std::move(sel.maximal);
      }
      break;
    }
    current = std::move(sel.maximal);
    p = scaled_weight(sg, current);
    q = static_cast<Wide>(std::count(current.begin(), current.end(), 1));
  }
  return make_result(g, members(current), Algorithm::kExactFlow, sg.scale.exact);
}

SearchOutcome binary_search_objective(const SignedGraph& g, const ObjectiveParams& params, double eps,
                                      std::span<const double> c_list) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw BadParameters("eps must be a finite value > 0");
  const std::size_t n = g.num_nodes();
  if (n == 0) throw EmptySet("binary search needs at least one node");

  // Seed with the best single node, so a witness exists even if no query
  // succeeds.
  std::vector<double> loop_pos(n, 0.0), loop_neg(n, 0.0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      loop_pos[e.u] += e.wpos;
      loop_neg[e.u] += e.wneg;
    }
  }
  std::vector<NodeId> best_nodes{0};
  double best_f = params.evaluate(loop_pos[0], loop_neg[0], 1);
  for (NodeId v = 1; v < n; ++v) {
    const double f = params.evaluate(loop_pos[v], loop_neg[v], 1);
    if (f > best_f + kTieTolerance) {
      best_f = f;
      best_nodes = {v};
    }
  }

  SearchTrace trace;
  double lo = best_f;
  double hi = params.upper_bound(g);
  const PeelScoring density = PeelScoring::net_density();
  while (trace.iterations < kSearchIterationCap && hi - lo > eps * std::max(1.0, hi)) {
    const double q = lo + (hi - lo) / 2.0;
    const auto tilde = tilde_weights(g, q, params.risk_weight());
    const double threshold = q * params.lambda2() - params.lambda1();

    std::vector<NodeId> witness;
    if (tilde.all_nonnegative) {
      auto decision = dsd_decision(tilde.graph, threshold);
      if (decision.feasible) witness = std::move(decision.witness);
    } else {
      ++trace.heuristic_queries;
      trace.exact = false;
      auto r = c_sweep(tilde.graph, c_list, density);
      if (objective_f(g, r.nodes, params) >= q - kTieTolerance) witness = std::move(r.nodes);
    }

    if (!witness.empty()) {
      const double f = objective_f(g, witness, params);
      if (f > best_f + kTieTolerance) {
        best_f = f;
        best_nodes = std::move(witness);
      }
      lo = q;
    } else {
      hi = q;
    }
    ++trace.iterations;
    trace.lo.push_back(lo);
    trace.hi.push_back(hi);
  }

  auto result = make_result(g, std::move(best_nodes), Algorithm::kBinarySearch, trace.exact, &params);
  return {std::move(result), std::move(trace)};
}

namespace {

/// True when the sorted node list of `a` precedes that of `b`.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  const std::uint32_t low = diff & (~diff + 1);
  const bool a_has_low = (a & low) != 0;
  // Below `low` the two lists agree. The set holding `low` continues with it;
  // the other either continues with a larger id (and loses) or ends (and wins).
  const std::uint32_t above = ~((low << 1) - 1);
  const std::uint32_t other = a_has_low ? b : a;
  const bool other_continues = (other & above) != 0;
  return a_has_low ? other_continues : !other_continues;
}

struct BruteForceSearch {
  std::size_t n;
  std::vector<double> pos;  // dense n x n, loops on the diagonal
  std::vector<double> neg;
  BruteForceMode mode;
  const ObjectiveParams* params;

  std::uint32_t best_mask = 0;
  double best_value = 0.0;

  double score(double wp, double wn, std::size_t size) const {
    if (mode == BruteForceMode::kObjective) return params->evaluate(wp, wn, size);
    return (wp - wn) / static_cast<double>(size);
  }

  void visit(std::size_t i, std::uint32_t mask, std::size_t size, double wp, double wn) {
    if (i == n) {
      if (size == 0) return;
      const double v = score(wp, wn, size);
      const bool better = best_mask == 0 || v > best_value + kTieTolerance;
      const bool tie = !better && v >= best_value - kTieTolerance;
      if (better || (tie && lex_less(mask, best_mask))) {
        best_value = better ? v : std::max(best_value, v);
        best_mask = mask;
      }
      return;
    }
    visit(i + 1, mask, size, wp, wn);
    double add_p = pos[i * n + i];
    double add_n = neg[i * n + i];
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest));
      add_p += pos[i * n + j];
      add_n += neg[i * n + j];
    }
    visit(i + 1, mask | (std::uint32_t{1} << i), size + 1, wp + add_p, wn + add_n);
  }
};

}  // namespace

DsdResult brute_force(const SignedGraph& g, BruteForceMode mode, const std::optional<ObjectiveParams>& params) {
  const std::size_t n = g.num_nodes();
  if (n > kBruteForceMaxNodes) {
    throw TooLarge("brute force enumerates 2^n subsets and is limited to " + std::to_string(kBruteForceMaxNodes) +
                   " nodes, got " + std::to_string(n));
  }
  if (n == 0) throw EmptySet("brute force needs at least one node");
  if (mode == BruteForceMode::kObjective && !params) throw BadParameters("objective mode needs parameters");

  BruteForceSearch search{n, std::vector<double>(n * n, 0.0), std::vector<double>(n * n, 0.0), mode,
                          params ? &*params : nullptr};
  for (const auto& e : g.edges()) {
    search.pos[e.u * n + e.v] = search.pos[e.v * n + e.u] = e.wpos;
    search.neg[e.u * n + e.v] = search.neg[e.v * n + e.u] = e.wneg;
  }
  search.visit(0, 0, 0, 0.0, 0.0);

  std::vector<NodeId> nodes;
  for (std::uint32_t rest = search.best_mask; rest != 0; rest &= rest - 1) {
    nodes.push_back(static_cast<NodeId>(std::countr_zero(rest)));
  }
  return make_result(g, std::move(nodes), Algorithm::kBruteForce, true,
                     mode == BruteForceMode::kObjective ? &*params : nullptr);
}

}  // namespace negdsd
