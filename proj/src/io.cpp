#include "negdsd/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "negdsd/errors.hpp"

namespace negdsd::io {

NodeId LabelMap::intern(std::string_view label) {
  const std::string key(label);
  if (const auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<NodeId>(labels_.size());
  ids_.emplace(key, id);
  labels_.push_back(key);
  return id;
}

std::optional<NodeId> LabelMap::find(std::string_view label) const {
  const auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

LabelMap LabelMap::identity(std::size_t n) {
  LabelMap m;
  for (std::size_t i = 0; i < n; ++i) m.intern(std::to_string(i));
  return m;
}

namespace {

/// Splits a line into tokens, dropping everything from a '#'-token onwards.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

class LineReader {
 public:
  LineReader(std::istream& in, const std::string& source) : in_(in), source_(source) {}

  /// Next non-blank line's tokens; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      tokens = tokenize(buffer_);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  double number(std::string_view token, const char* field) const {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(x)) {
      fail(std::string("expected a finite number for ") + field + ", got '" + std::string(token) + "'");
    }
    return x;
  }

  double magnitude(std::string_view token, const char* field) const {
    const double x = number(token, field);
    if (x < 0.0) fail(std::string(field) + " must be >= 0, got '" + std::string(token) + "'");
    return x;
  }

 private:
  std::istream& in_;
  const std::string& source_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace

SignedInput read_signed(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  SignedInput out;
  std::vector<SignedEdge> raw;
  std::size_t columns = 0;
  std::vector<std::string_view> t;
  while (reader.next(t)) {
    if (t.size() == 1) {
      out.labels.intern(t[0]);
      continue;
    }
    if (t.size() != 3 && t.size() != 4) {
      reader.fail("expected 'u v w' or 'u v wpos wneg', got " + std::to_string(t.size()) + " columns");
    }
    if (columns == 0) columns = t.size();
    if (t.size() != columns) {
      reader.fail("column count " + std::to_string(t.size()) + " differs from the first edge line (" +
                  std::to_string(columns) + ")");
    }
    SignedEdge e;
    if (columns == 3) {
      const double w = reader.number(t[2], "w");
      e.wpos = std::max(w, 0.0);
      e.wneg = std::max(-w, 0.0);
    } else {
      e.wpos = reader.magnitude(t[2], "wpos");
      e.wneg = reader.magnitude(t[3], "wneg");
    }
    e.u = out.labels.intern(t[0]);
    e.v = out.labels.intern(t[1]);
    raw.push_back(e);
  }
  out.graph = SignedGraph::build(out.labels.size(), raw);
  return out;
}

UncertainInput read_uncertain(std::istream& in, UncertainFormat format, const std::string& source) {
  LineReader reader(in, source);
  UncertainInput out;
  std::vector<UncertainEdge> edges;
  std::vector<std::string_view> t;
  while (reader.next(t)) {
    if (t.size() == 1) {
      out.labels.intern(t[0]);
      continue;
    }
    if (t.size() != 4) {
      reader.fail(format == UncertainFormat::kBernoulli ? "expected 'u v p w'" : "expected 'u v mu sigma2'");
    }
    UncertainEdge e;
    if (format == UncertainFormat::kBernoulli) {
      const double p = reader.number(t[2], "p");
      const double w = reader.magnitude(t[3], "w");
      if (!(p > 0.0 && p <= 1.0)) reader.fail("edge probability must lie in (0, 1], got '" + std::string(t[2]) + "'");
      const auto m = bernoulli_moments(p, w);
      e.mu = m.mu;
      e.sigma2 = m.sigma2;
    } else {
      e.mu = reader.magnitude(t[2], "mu");
      e.sigma2 = reader.magnitude(t[3], "sigma2");
    }
    e.u = out.labels.intern(t[0]);
    e.v = out.labels.intern(t[1]);
    edges.push_back(e);
  }
  out.graph = UncertainGraph(out.labels.size(), std::move(edges));
  return out;
}

MultilayerInput read_multilayer(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  MultilayerInput out;
  std::vector<std::string> layer_names;
  std::unordered_map<std::string, LayerId> layer_ids;
  std::vector<LayerEdge> edges;
  std::vector<std::string_view> t;
  while (reader.next(t)) {
    if (t.size() == 1) {
      out.labels.intern(t[0]);
      continue;
    }
    if (t.size() != 3) reader.fail("expected 'u v layer_name', got " + std::to_string(t.size()) + " columns");
    const std::string name(t[2]);
    auto [it, inserted] = layer_ids.emplace(name, static_cast<LayerId>(layer_names.size()));
    if (inserted) layer_names.push_back(name);
    edges.push_back({out.labels.intern(t[0]), out.labels.intern(t[1]), it->second});
  }
  out.graph = MultilayerGraph(out.labels.size(), std::move(layer_names), std::move(edges));
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_signed(std::ostream& out, const SignedGraph& g, const LabelMap& labels) {
  std::string text;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    text += labels.label(v);
    text += '\n';
  }
  for (const auto& e : g.edges()) {
    text += labels.label(e.u);
    text += ' ';
    text += labels.label(e.v);
    text += ' ';
    text += format_double(e.wpos);
    text += ' ';
    text += format_double(e.wneg);
    text += '\n';
  }
  out << text;
}

}  // namespace negdsd::io
