#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "negdsd/multilayer.hpp"
#include "negdsd/signed_graph.hpp"
#include "negdsd/uncertain.hpp"

namespace negdsd::io {

/// Bijection between external string labels and dense node ids, assigned in
/// order of first appearance.
class LabelMap {
 public:
  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  const std::string& label(NodeId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Labels "0", "1", ..., "n-1".
  static LabelMap identity(std::size_t n);

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
};

struct SignedInput {
  SignedGraph graph;
  LabelMap labels;
};

struct UncertainInput {
  UncertainGraph graph;
  LabelMap labels;
};

struct MultilayerInput {
  MultilayerGraph graph;
  LabelMap labels;
};

enum class UncertainFormat { kBernoulli, kMoments };

// All readers take whitespace-delimited text. A token starting with '#'
// comments out the rest of its line, and a one-column line declares a node
// (so isolated nodes survive a round trip). Malformed lines raise ParseError
// carrying `source` and the line number.

/// "u v w" (net weight, split by sign) or "u v wpos wneg"; the first edge
/// line fixes the column count for the whole input.
SignedInput read_signed(std::istream& in, const std::string& source);

/// "u v p w" (Bernoulli) or "u v mu sigma2" (moments).
UncertainInput read_uncertain(std::istream& in, UncertainFormat format, const std::string& source);

/// "u v layer_name".
MultilayerInput read_multilayer(std::istream& in, const std::string& source);

/// Shortest text that parses back to exactly `x`.
std::string format_double(double x);

/// Emits every node as a declaration line, then one "u v wpos wneg" line per
/// collapsed pair. Reading the output back yields an identical graph.
void write_signed(std::ostream& out, const SignedGraph& g, const LabelMap& labels);

}  // namespace negdsd::io
