#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negdsd/signed_graph.hpp"

namespace negdsd {

using LayerId = std::uint32_t;

struct LayerEdge {
  NodeId u = 0;
  NodeId v = 0;
  LayerId layer = 0;
};

/// Undirected multigraph whose edges carry a layer label (interaction type).
/// Parallel edges are kept.
class MultilayerGraph {
 public:
  MultilayerGraph() = default;

  /// Throws UnknownLayer for a layer id outside `layer_names` and UnknownNode
  /// for an endpoint >= n.
  MultilayerGraph(std::size_t n, std::vector<std::string> layer_names, std::vector<LayerEdge> edges);

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t num_layers() const noexcept { return layer_names_.size(); }
  std::span<const std::string> layer_names() const noexcept { return layer_names_; }
  std::span<const LayerEdge> edges() const noexcept { return edges_; }

  /// Throws UnknownLayer.
  LayerId layer_id(std::string_view name) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> layer_names_;
  std::vector<LayerEdge> edges_;
};

struct ExclusionQuery {
  enum class Mode { kSoft, kHard };

  std::set<LayerId> excluded;
  Mode mode = Mode::kSoft;
  double penalty = 1.0;  // W, used in soft mode only

  /// Throws BadParameters unless W > 0.
  static ExclusionQuery soft(std::set<LayerId> excluded, double penalty);
  static ExclusionQuery hard(std::set<LayerId> excluded);
};

/// (number of non-excluded edges) + 1. Any set inducing an excluded edge then
/// has negative total weight.
double hard_W(const MultilayerGraph& m, const std::set<LayerId>& excluded);

/// W the query resolves to on `m`.
double resolved_penalty(const MultilayerGraph& m, const ExclusionQuery& q);

/// Non-excluded edges add 1 to wpos, excluded ones add W to wneg; parallel
/// edges sum per pair. Throws UnknownLayer.
SignedGraph apply_exclusion(const MultilayerGraph& m, const ExclusionQuery& q);

/// Count of induced edges on `layer` divided by |nodes|. Throws EmptySet,
/// UnknownNode or UnknownLayer.
double layer_density(const MultilayerGraph& m, std::span<const NodeId> nodes, LayerId layer);

struct LayerReport {
  std::string name;
  std::size_t induced_edges = 0;
  bool excluded = false;
  double density = 0.0;         // raw count / |S|
  double signed_density = 0.0;  // -W count / |S| on excluded layers, density otherwise
};

/// One entry per layer, in layer-id order.
std::vector<LayerReport> layer_report(const MultilayerGraph& m, std::span<const NodeId> nodes,
                                      const ExclusionQuery& q);

}  // namespace negdsd
