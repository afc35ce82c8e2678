#include <doctest.h>

#include <random>
#include <sstream>

#include "negdsd/errors.hpp"
#include "negdsd/io.hpp"
#include "negdsd/testkit.hpp"

using namespace negdsd;

namespace {

io::SignedInput parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_signed(in, "test");
}

int parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("read_signed: three columns split net weights by sign") {
  const auto in = parse("# comment\nalice bob 2\nbob carol -1.5  # trailing\n\ncarol carol 0\n");
  CHECK(in.labels.size() == 3);
  CHECK(in.labels.label(0) == "alice");
  CHECK(*in.labels.find("carol") == 2);
  CHECK_FALSE(in.labels.find("dave"));
  const auto e = in.graph.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == SignedEdge{0, 1, 2.0, 0.0});
  CHECK(e[1] == SignedEdge{1, 2, 0.0, 1.5});
  CHECK(e[2] == SignedEdge{2, 2, 0.0, 0.0});
}

TEST_CASE("read_signed: four columns and node declarations") {
  const auto in = parse("x\n1 2 3 0.5\n2 1 1 0\n");
  CHECK(in.graph.num_nodes() == 3);
  REQUIRE(in.graph.num_edges() == 1);
  CHECK(in.graph.edges()[0] == SignedEdge{1, 2, 4.0, 0.5});
}

TEST_CASE("read_signed: diagnostics carry line numbers") {
  CHECK(parse_error_line("a b 1\n\na b x\n") == 3);
  CHECK(parse_error_line("a b 1\na b 1 2\n") == 2);
  CHECK(parse_error_line("a b 1 -2\n") == 1);
  CHECK(parse_error_line("a b\n") == 1);
  CHECK(parse_error_line("a b c d e\n") == 1);
  CHECK(parse_error_line("a b inf\n") == 1);
  CHECK(parse_error_line("a b nan\n") == 1);
  CHECK(parse_error_line("a b 1e999\n") == 1);
  try {
    parse("# header\na b 1x\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("test:2:", 0) == 0);
  }
}

TEST_CASE("read_uncertain formats") {
  std::istringstream b("u v 0.5 2\nv w 1 5\n");
  const auto bern = io::read_uncertain(b, io::UncertainFormat::kBernoulli, "b");
  REQUIRE(bern.graph.edges().size() == 2);
  CHECK(bern.graph.edges()[0].mu == 1.0);
  CHECK(bern.graph.edges()[0].sigma2 == 1.0);
  CHECK(bern.graph.edges()[1].sigma2 == 0.0);

  std::istringstream m("u v 0.17 0.08\n");
  const auto mom = io::read_uncertain(m, io::UncertainFormat::kMoments, "m");
  CHECK(mom.graph.edges()[0].mu == 0.17);
  CHECK(mom.graph.edges()[0].sigma2 == 0.08);

  std::istringstream bad_p("u v 0 2\n");
  CHECK_THROWS_AS(io::read_uncertain(bad_p, io::UncertainFormat::kBernoulli, "b"), ParseError);
  std::istringstream short_row("u v 0.5\n");
  CHECK_THROWS_AS(io::read_uncertain(short_row, io::UncertainFormat::kMoments, "m"), ParseError);
  std::istringstream neg("u v 1 -1\n");
  CHECK_THROWS_AS(io::read_uncertain(neg, io::UncertainFormat::kMoments, "m"), ParseError);
}

TEST_CASE("read_multilayer") {
  std::istringstream in("a b follow\nb c reply\na b follow\nc d retweet # x\n");
  const auto ml = io::read_multilayer(in, "ml");
  CHECK(ml.graph.num_nodes() == 4);
  CHECK(ml.graph.num_layers() == 3);
  CHECK(ml.graph.layer_id("follow") == 0);
  CHECK(ml.graph.layer_id("retweet") == 2);
  CHECK(ml.graph.edges().size() == 4);

  std::istringstream bad("a b\n");
  CHECK_THROWS_AS(io::read_multilayer(bad, "ml"), ParseError);
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng) / 7.0;
    CHECK(std::stod(io::format_double(x)) == x);
  }
  CHECK(io::format_double(0.01) == "0.01");
  CHECK(io::format_double(4.0) == "4");
}

TEST_CASE("write_signed then read_signed reproduces the graph") {
  const SignedGraph graphs[] = {testkit::gen_bad_peeling(16, 0.01), testkit::gen_two_component(5, 9, 42),
                                testkit::gen_shift_failure(20, 10, 0.01), SignedGraph::build(3, {})};
  for (const auto& g : graphs) {
    std::ostringstream out;
    io::write_signed(out, g, io::LabelMap::identity(g.num_nodes()));
    const auto back = parse(out.str());
    CHECK(back.graph.num_nodes() == g.num_nodes());
    CHECK(std::equal(g.edges().begin(), g.edges().end(), back.graph.edges().begin(), back.graph.edges().end()));
  }
}
