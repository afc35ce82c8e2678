#include "negdsd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "negdsd/errors.hpp"
#include "negdsd/exact.hpp"
#include "negdsd/io.hpp"
#include "negdsd/multilayer.hpp"
#include "negdsd/peeling.hpp"
#include "negdsd/testkit.hpp"
#include "negdsd/uncertain.hpp"

namespace negdsd::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::string input;
  std::string format = "json";
  std::string c_list = "0.1,0.25,0.5,1,2,4,10";
  std::string risk_c_list = "1";
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double risk_weight = 1.0;
  bool objective = false;
  double eps = 1e-9;
  bool bernoulli = false;
  bool moments = false;
  std::string solver = "peel";
  bool layers = false;
  std::vector<std::string> excluded;
  std::optional<double> penalty;
  bool hard = false;
  // gen
  std::size_t n = 16;
  std::size_t shift_n = 20;
  std::size_t r = 10;
  double gen_eps = 0.01;
  double delta = 10.0;
  std::uint64_t seed = 1;
};

/// Argument errors detected after CLI11 parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_c_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--c-list: '" + item + "' is not a number");
    }
  }
  return out;
}

/// Reads the configured input, falling back to `in` for "" or "-".
template <typename Reader>
auto with_input(const RunConfig& cfg, std::istream& in, Reader&& reader) {
  if (cfg.input.empty() || cfg.input == "-") return reader(in, std::string("<stdin>"));
  std::ifstream file(cfg.input);
  if (!file) throw ParseError(cfg.input, 0, "cannot open file");
  return reader(file, cfg.input);
}

json result_json(const DsdResult& r, const io::LabelMap& labels) {
  json j;
  json nodes = json::array();
  for (NodeId v : r.nodes) nodes.push_back(labels.label(v));
  j["nodes"] = std::move(nodes);
  j["size"] = r.size();
  j["net_density"] = r.net_density;
  j["wpos_total"] = r.wpos_total;
  j["wneg_total"] = r.wneg_total;
  j["f_value"] = r.f_value ? json(*r.f_value) : json(nullptr);
  j["exact"] = r.exact;
  j["algorithm"] = std::string(to_string(r.algorithm));
  j["c_used"] = r.c_used ? json(*r.c_used) : json(nullptr);
  return j;
}

json params_json(const ObjectiveParams& p) {
  return {{"lambda1", p.lambda1()}, {"lambda2", p.lambda2()}, {"B", p.risk_weight()}};
}

void flatten_tsv(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten_tsv(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array() && std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    out += prefix + '\t';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ',';
      out += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
    }
    out += '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_tsv(j[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out += prefix + '\t' + (j.is_string() ? j.get<std::string>() : j.dump()) + '\n';
}

std::string render(const json& report, const std::string& format) {
  if (format == "tsv") {
    std::string out;
    flatten_tsv(report, "", out);
    return out;
  }
  return report.dump(2) + '\n';
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string cmd_peel(const RunConfig& cfg, std::istream& in) {
  const auto input = with_input(cfg, in, io::read_signed);
  const auto cs = parse_c_list(cfg.c_list);
  const ObjectiveParams params(cfg.lambda1, cfg.lambda2, cfg.risk_weight);
  const auto scoring = cfg.objective ? PeelScoring::objective(params) : PeelScoring::net_density();
  const auto start = Clock::now();
  auto r = c_sweep(input.graph, cs, scoring);
  if (!r.f_value) r.f_value = params.evaluate(r.wpos_total, r.wneg_total, r.size());
  json report = result_json(r, input.labels);
  report["scoring"] = cfg.objective ? "objective" : "net-density";
  report["params"] = params_json(params);
  report["wall_time_ms"] = elapsed_ms(start);
  return render(report, cfg.format);
}

std::string cmd_exact(const RunConfig& cfg, std::istream& in) {
  const auto input = with_input(cfg, in, io::read_signed);
  const auto start = Clock::now();
  const auto r = exact_dsd(input.graph);
  json report = result_json(r, input.labels);
  report["wall_time_ms"] = elapsed_ms(start);
  return render(report, cfg.format);
}

json trace_json(const SearchTrace& t) {
  return {{"iterations", t.iterations},
          {"lo", t.lo},
          {"hi", t.hi},
          {"heuristic_queries", t.heuristic_queries},
          {"exact", t.exact}};
}

std::string cmd_search(const RunConfig& cfg, std::istream& in) {
  const auto input = with_input(cfg, in, io::read_signed);
  const auto cs = parse_c_list(cfg.c_list);
  const ObjectiveParams params(cfg.lambda1, cfg.lambda2, cfg.risk_weight);
  const auto start = Clock::now();
  const auto outcome = binary_search_objective(input.graph, params, cfg.eps, cs);
  json report = result_json(outcome.result, input.labels);
  report["params"] = params_json(params);
  report["search"] = trace_json(outcome.trace);
  report["wall_time_ms"] = elapsed_ms(start);
  return render(report, cfg.format);
}

std::string cmd_risk(const RunConfig& cfg, std::istream& in) {
  if (cfg.bernoulli == cfg.moments) throw UsageError("risk: select exactly one of --bernoulli or --moments");
  const auto format = cfg.bernoulli ? io::UncertainFormat::kBernoulli : io::UncertainFormat::kMoments;
  const auto input = with_input(cfg, in, [format](std::istream& s, const std::string& name) {
    return io::read_uncertain(s, format, name);
  });
  const ObjectiveParams params(cfg.lambda1, cfg.lambda2, cfg.risk_weight);
  const auto cs = parse_c_list(cfg.risk_c_list);
  const auto start = Clock::now();
  const auto g = uncertain_to_signed(input.graph);
  json report;
  DsdResult r;
  if (cfg.solver == "search") {
    auto outcome = binary_search_objective(g, params, cfg.eps, cs);
    r = std::move(outcome.result);
    report["search"] = trace_json(outcome.trace);
  } else if (cfg.solver == "peel") {
    r = c_sweep(g, cs, PeelScoring::objective(params));
  } else {
    throw UsageError("risk: --solver must be 'peel' or 'search'");
  }
  const auto risk = risk_profile(input.graph, r.nodes);
  report.update(result_json(r, input.labels));
  report["params"] = params_json(params);
  report["risk"] = {{"avg_expected_reward", risk.avg_expected_reward},
                    {"avg_risk", risk.avg_risk},
                    {"size", risk.size}};
  report["wall_time_ms"] = elapsed_ms(start);
  return render(report, cfg.format);
}

std::string cmd_exclude(const RunConfig& cfg, std::istream& in) {
  if (cfg.hard == cfg.penalty.has_value()) throw UsageError("exclude: give exactly one of --W or --hard");
  const auto input = with_input(cfg, in, io::read_multilayer);
  const auto& m = input.graph;
  std::set<LayerId> excluded;
  for (const auto& item : cfg.excluded) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) excluded.insert(m.layer_id(name));
    }
  }
  const auto query = cfg.hard ? ExclusionQuery::hard(excluded) : ExclusionQuery::soft(excluded, *cfg.penalty);
  const auto start = Clock::now();
  const auto g = apply_exclusion(m, query);
  DsdResult r;
  if (cfg.solver == "peel") {
    r = c_sweep(g, parse_c_list(cfg.c_list), PeelScoring::net_density());
  } else if (cfg.solver == "oracle") {
    r = brute_force(g, BruteForceMode::kDensity);
  } else {
    throw UsageError("exclude: --solver must be 'peel' or 'oracle'");
  }
  json report = result_json(r, input.labels);
  json layers = json::array();
  for (const auto& l : layer_report(m, r.nodes, query)) {
    layers.push_back({{"name", l.name},
                      {"induced_edges", l.induced_edges},
                      {"excluded", l.excluded},
                      {"density", l.density},
                      {"signed_density", l.signed_density}});
  }
  report["layers"] = std::move(layers);
  report["W"] = resolved_penalty(m, query);
  report["hard"] = cfg.hard;
  report["wall_time_ms"] = elapsed_ms(start);
  return render(report, cfg.format);
}

std::string cmd_oracle(const RunConfig& cfg, std::istream& in) {
  const auto input = with_input(cfg, in, io::read_signed);
  const ObjectiveParams params(cfg.lambda1, cfg.lambda2, cfg.risk_weight);
  const auto start = Clock::now();
  const auto r = cfg.objective ? brute_force(input.graph, BruteForceMode::kObjective, params)
                               : brute_force(input.graph, BruteForceMode::kDensity);
  json report = result_json(r, input.labels);
  if (cfg.objective) report["params"] = params_json(params);
  report["wall_time_ms"] = elapsed_ms(start);
  return render(report, cfg.format);
}

std::string emit(const SignedGraph& g) {
  std::ostringstream s;
  io::write_signed(s, g, io::LabelMap::identity(g.num_nodes()));
  return s.str();
}

void add_params(CLI::App* app, RunConfig& cfg) {
  app->add_option("--lambda1", cfg.lambda1, "Size reward lambda1 (>= 0)")->capture_default_str();
  app->add_option("--lambda2", cfg.lambda2, "Size penalty lambda2 (> 0)")->capture_default_str();
  app->add_option("--B,--risk-weight", cfg.risk_weight, "Multiplier B on the negative weight (> 0)")
      ->capture_default_str();
}

void add_io(CLI::App* app, RunConfig& cfg) {
  app->add_option("input", cfg.input, "Input file ('-' or omitted: standard input)");
  app->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dense subgraph discovery on graphs with positive and negative edge weights", "negdsd"};
  app.require_subcommand(1);

  std::function<std::string()> action;

  auto* peel_cmd = app.add_subcommand("peel", "Peeling with a sweep over C values");
  add_io(peel_cmd, cfg);
  add_params(peel_cmd, cfg);
  peel_cmd->add_option("--c-list", cfg.c_list, "Comma-separated C values")->capture_default_str();
  peel_cmd->add_flag("--objective", cfg.objective, "Score prefixes by f instead of net density");
  peel_cmd->callback([&] { action = [&] { return cmd_peel(cfg, in); }; });

  auto* exact_cmd = app.add_subcommand("exact", "Exact densest subgraph (nonnegative weights only)");
  add_io(exact_cmd, cfg);
  exact_cmd->callback([&] { action = [&] { return cmd_exact(cfg, in); }; });

  auto* search_cmd = app.add_subcommand("search", "Binary search on the objective f");
  add_io(search_cmd, cfg);
  add_params(search_cmd, cfg);
  search_cmd->add_option("--eps", cfg.eps, "Relative bracket tolerance")->capture_default_str();
  search_cmd->add_option("--c-list", cfg.c_list, "C values for the heuristic fallback")->capture_default_str();
  search_cmd->callback([&] { action = [&] { return cmd_search(cfg, in); }; });

  auto* risk_cmd = app.add_subcommand("risk", "Risk-averse dense subgraph on an uncertain graph");
  add_io(risk_cmd, cfg);
  add_params(risk_cmd, cfg);
  risk_cmd->add_flag("--bernoulli", cfg.bernoulli, "Input rows are 'u v p w'");
  risk_cmd->add_flag("--moments", cfg.moments, "Input rows are 'u v mu sigma2'");
  risk_cmd->add_option("--solver", cfg.solver, "peel or search")->capture_default_str();
  risk_cmd->add_option("--c-list", cfg.risk_c_list, "Comma-separated C values")->capture_default_str();
  risk_cmd->add_option("--eps", cfg.eps, "Search tolerance")->capture_default_str();
  risk_cmd->callback([&] { action = [&] { return cmd_risk(cfg, in); }; });

  auto* exclude_cmd = app.add_subcommand("exclude", "Exclusion query on a multilayer graph");
  add_io(exclude_cmd, cfg);
  exclude_cmd->add_flag("--layers", cfg.layers, "Input rows are 'u v layer_name' (always the case here)");
  exclude_cmd->add_option("--exclude", cfg.excluded, "Layer(s) to exclude; repeatable or comma-separated");
  exclude_cmd->add_option("--W", cfg.penalty, "Soft penalty W > 0 per excluded edge");
  exclude_cmd->add_flag("--hard", cfg.hard, "Penalty large enough to exclude every excluded-layer edge");
  exclude_cmd->add_option("--c-list", cfg.c_list, "Comma-separated C values")->capture_default_str();
  exclude_cmd->add_option("--solver", cfg.solver, "peel or oracle")->capture_default_str();
  exclude_cmd->callback([&] { action = [&] { return cmd_exclude(cfg, in); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute force over all subsets (at most 22 nodes)");
  add_io(oracle_cmd, cfg);
  add_params(oracle_cmd, cfg);
  oracle_cmd->add_flag("--objective", cfg.objective, "Maximize f instead of net density");
  oracle_cmd->callback([&] { action = [&] { return cmd_oracle(cfg, in); }; });

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated instance as a signed edge list");
  gen_cmd->require_subcommand(1);
  auto* bad = gen_cmd->add_subcommand("bad-peeling", "Instance where plain peeling fails");
  bad->add_option("--n", cfg.n, "Filler count (>= 7, = 1 mod 3)")->capture_default_str();
  bad->add_option("--eps", cfg.gen_eps, "Triangle weight")->capture_default_str();
  bad->callback([&] { action = [&] { return emit(testkit::gen_bad_peeling(cfg.n, cfg.gen_eps)); }; });
  auto* two = gen_cmd->add_subcommand("two-component", "Positive clique next to a random +/-1 component");
  two->add_option("--r", cfg.r, "Clique size")->capture_default_str();
  two->add_option("--n", cfg.n, "Random component size")->capture_default_str();
  two->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  two->callback([&] { action = [&] { return emit(testkit::gen_two_component(cfg.r, cfg.n, cfg.seed)); }; });
  auto* shift = gen_cmd->add_subcommand("shift-failure", "Instance where weight shifting fails");
  shift->add_option("--n", cfg.shift_n, "Clique size")->capture_default_str();
  shift->add_option("--delta", cfg.delta, "Negative edge magnitude")->capture_default_str();
  shift->add_option("--eps", cfg.gen_eps, "Clique edge magnitude")->capture_default_str();
  shift->callback([&] { action = [&] { return emit(testkit::gen_shift_failure(cfg.shift_n, cfg.delta, cfg.gen_eps)); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string report = action();
    out << report;
    out.flush();
    return 0;
  } catch (const ParseError& e) {
    err << "negdsd: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "negdsd: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "negdsd: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace negdsd::cli
