#include "negdsd/multilayer.hpp"

#include <algorithm>
#include <cmath>

#include "negdsd/errors.hpp"

namespace negdsd {

namespace {

void check_layers(const MultilayerGraph& m, const std::set<LayerId>& layers) {
  for (auto l : layers) {
    if (l >= m.num_layers()) throw UnknownLayer("layer id " + std::to_string(l) + " does not exist");
  }
}

std::vector<std::size_t> induced_counts(const MultilayerGraph& m, std::span<const NodeId> nodes, std::size_t& size) {
  if (nodes.empty()) throw EmptySet("layer densities need a nonempty node set");
  std::vector<char> member(m.num_nodes(), 0);
  size = 0;
  for (NodeId v : nodes) {
    if (v >= m.num_nodes()) throw UnknownNode("node " + std::to_string(v) + " is not in the graph");
    if (!member[v]) {
      member[v] = 1;
      ++size;
    }
  }
  std::vector<std::size_t> counts(m.num_layers(), 0);
  for (const auto& e : m.edges()) {
    if (member[e.u] && member[e.v]) ++counts[e.layer];
  }
  return counts;
}

}  // namespace

MultilayerGraph::MultilayerGraph(std::size_t n, std::vector<std::string> layer_names, std::vector<LayerEdge> edges)
    : n_(n), layer_names_(std::move(layer_names)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.layer >= layer_names_.size()) throw UnknownLayer("edge refers to layer id " + std::to_string(e.layer));
    if (e.u >= n_ || e.v >= n_) throw UnknownNode("multilayer edge endpoint out of range");
  }
}

LayerId MultilayerGraph::layer_id(std::string_view name) const {
  const auto it = std::find(layer_names_.begin(), layer_names_.end(), name);
  if (it == layer_names_.end()) throw UnknownLayer("no layer named '" + std::string(name) + "'");
  return static_cast<LayerId>(it - layer_names_.begin());
}

ExclusionQuery ExclusionQuery::soft(std::set<LayerId> excluded, double penalty) {
  if (!(penalty > 0.0) || !std::isfinite(penalty)) throw BadParameters("soft exclusion needs a finite W > 0");
  return {std::move(excluded), Mode::kSoft, penalty};
}

ExclusionQuery ExclusionQuery::hard(std::set<LayerId> excluded) { return {std::move(excluded), Mode::kHard, 0.0}; }

double hard_W(const MultilayerGraph& m, const std::set<LayerId>& excluded) {
  const auto kept = std::count_if(m.edges().begin(), m.edges().end(),
                                  [&](const LayerEdge& e) { return excluded.count(e.layer) == 0; });
  return static_cast<double>(kept) + 1.0;
}

double resolved_penalty(const MultilayerGraph& m, const ExclusionQuery& q) {
  return q.mode == ExclusionQuery::Mode::kHard ? hard_W(m, q.excluded) : q.penalty;
}

SignedGraph apply_exclusion(const MultilayerGraph& m, const ExclusionQuery& q) {
  check_layers(m, q.excluded);
  const double w = resolved_penalty(m, q);
  std::vector<SignedEdge> raw;
  raw.reserve(m.edges().size());
  for (const auto& e : m.edges()) {
    if (q.excluded.count(e.layer)) {
      raw.push_back({e.u, e.v, 0.0, w});
    } else {
      raw.push_back({e.u, e.v, 1.0, 0.0});
    }
  }
  return SignedGraph::build(m.num_nodes(), raw);
}

double layer_density(const MultilayerGraph& m, std::span<const NodeId> nodes, LayerId layer) {
  check_layers(m, {layer});
  std::size_t size = 0;
  const auto counts = induced_counts(m, nodes, size);
  return static_cast<double>(counts[layer]) / static_cast<double>(size);
}

std::vector<LayerReport> layer_report(const MultilayerGraph& m, std::span<const NodeId> nodes,
                                      const ExclusionQuery& q) {
  check_layers(m, q.excluded);
  std::size_t size = 0;
  const auto counts = induced_counts(m, nodes, size);
  const double w = resolved_penalty(m, q);
  std::vector<LayerReport> out;
  out.reserve(m.num_layers());
  for (LayerId l = 0; l < m.num_layers(); ++l) {
    LayerReport r;
    r.name = m.layer_names()[l];
    r.induced_edges = counts[l];
    r.excluded = q.excluded.count(l) != 0;
    r.density = static_cast<double>(counts[l]) / static_cast<double>(size);
    r.signed_density = r.excluded ? -w * r.density : r.density;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace negdsd
