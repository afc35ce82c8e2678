#include <doctest.h>

#include <random>

#include "negdsd/errors.hpp"
#include "negdsd/uncertain.hpp"

using namespace negdsd;

TEST_CASE("bernoulli_moments examples") {
  auto m = bernoulli_moments(1.0, 5.0);
  CHECK(m.mu == 5.0);
  CHECK(m.sigma2 == 0.0);
  m = bernoulli_moments(0.5, 2.0);
  CHECK(m.mu == 1.0);
  CHECK(m.sigma2 == 1.0);
  m = bernoulli_moments(0.2, 1.0);
  CHECK(m.mu == doctest::Approx(0.2));
  CHECK(m.sigma2 == doctest::Approx(0.16));
}

TEST_CASE("bernoulli_moments errors") {
  CHECK_THROWS_AS(bernoulli_moments(0.0, 1.0), OutOfRange);
  CHECK_THROWS_AS(bernoulli_moments(1.5, 1.0), OutOfRange);
  CHECK_THROWS_AS(bernoulli_moments(-0.1, 1.0), OutOfRange);
  CHECK_THROWS_AS(bernoulli_moments(0.5, -1.0), OutOfRange);
}

TEST_CASE("property: moment identities") {
  for (double w : {0.0, 0.5, 1.0, 3.0}) {
    double best = -1.0, best_p = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double p = i / 100.0;
      const auto m = bernoulli_moments(p, w);
      CHECK(m.mu == doctest::Approx(w * p));
      CHECK((m.sigma2 == 0.0) == (p == 1.0 || w == 0.0));
      if (m.sigma2 > best) {
        best = m.sigma2;
        best_p = p;
      }
    }
    if (w > 0) CHECK(best_p == 0.5);
  }
}

TEST_CASE("uncertain_to_signed examples") {
  const UncertainGraph u(3, {{0, 1, 5.0, 0.0}, {1, 2, 0.17, 0.08}});
  const auto g = uncertain_to_signed(u);
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edges()[0] == SignedEdge{0, 1, 5.0, 0.0});
  CHECK(g.edges()[1] == SignedEdge{1, 2, 0.17, 0.08});

  const std::vector<BernoulliEdge> rows{{0, 1, 0.5, 2.0}};
  const auto b = uncertain_to_signed(UncertainGraph::from_bernoulli(2, rows));
  CHECK(b.edges()[0] == SignedEdge{0, 1, 1.0, 1.0});
}

TEST_CASE("UncertainGraph validation") {
  CHECK_THROWS_AS(UncertainGraph(2, {{0, 1, -1.0, 0.0}}), OutOfRange);
  CHECK_THROWS_AS(UncertainGraph(2, {{0, 1, 1.0, -0.1}}), OutOfRange);
  CHECK_THROWS_AS(UncertainGraph(2, {{0, 2, 1.0, 0.0}}), UnknownNode);
}

TEST_CASE("risk_profile examples") {
  // Six nodes inducing a total reward of 1.02.
  std::vector<UncertainEdge> edges;
  for (NodeId v = 1; v < 6; ++v) edges.push_back({0, v, 0.204, 0.1});
  const UncertainGraph u(6, edges);
  const std::vector<NodeId> all{0, 1, 2, 3, 4, 5};
  const auto r = risk_profile(u, all);
  CHECK(r.avg_expected_reward == doctest::Approx(0.17));
  CHECK(r.avg_risk == doctest::Approx(0.5 / 6));
  CHECK(r.size == 6);

  const std::vector<NodeId> leaves{1, 2, 3};
  const auto none = risk_profile(u, leaves);
  CHECK(none.avg_expected_reward == 0.0);
  CHECK(none.avg_risk == 0.0);
  CHECK(none.size == 3);

  CHECK_THROWS_AS(risk_profile(u, std::vector<NodeId>{}), EmptySet);
  CHECK_THROWS_AS(risk_profile(u, std::vector<NodeId>{9}), UnknownNode);
}

TEST_CASE("property: conversion and risk_profile consistency") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> prob(0.01, 1.0), weight(0.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<BernoulliEdge> rows;
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        if (rng() % 2) rows.push_back({a, b, prob(rng), weight(rng)});
      }
    }
    const auto u = UncertainGraph::from_bernoulli(n, rows);
    const auto g = uncertain_to_signed(u);
    const ObjectiveParams p(0.5, 1.5, 2.0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<NodeId> s;
      for (NodeId v = 0; v < n; ++v) {
        if (mask >> v & 1) s.push_back(v);
      }
      double mu = 0.0, var = 0.0;
      for (const auto& r : rows) {
        if ((mask >> r.u & 1) && (mask >> r.v & 1)) {
          mu += r.w * r.p;
          var += r.w * r.w * r.p * (1 - r.p);
        }
      }
      const auto k = static_cast<double>(s.size());
      CHECK(objective_f(g, s, p) == doctest::Approx((mu + 0.5 * k) / (2.0 * var + 1.5 * k)));
      const auto report = risk_profile(u, s);
      const auto w = induced_weights(g, s);
      CHECK(std::abs(report.avg_expected_reward * k - w.wpos) <= 1e-12);
      CHECK(std::abs(report.avg_risk * k - w.wneg) <= 1e-12);
    }
  }
}

TEST_CASE("tmdb_edge examples") {
  const std::map<std::string, double> pop{{"m1", 10}, {"m2", 8}, {"m3", 1}, {"m4", 1}, {"m5", 1},
                                          {"m6", 1},  {"m7", 1}, {"x", 5}};
  auto e = tmdb_edge({"m1", "m2"}, {"m1", "m2"}, pop);
  REQUIRE(e);
  CHECK(e->p == 1.0);
  CHECK(e->w == 14.0);

  CHECK_FALSE(tmdb_edge({"m1"}, {"m2"}, pop));

  const std::set<std::string> seven{"m1", "m2", "m3", "m4", "m5", "m6", "m7"};
  std::map<std::string, double> ones;
  for (const auto& m : seven) ones[m] = 1.0;
  e = tmdb_edge(seven, seven, ones);
  REQUIRE(e);
  CHECK(e->w == 1.9375);

  e = tmdb_edge({"m1", "x"}, {"m1", "m2"}, pop);
  REQUIRE(e);
  CHECK(e->p == doctest::Approx(1.0 / 3.0));
  CHECK(e->w == 10.0);
}

TEST_CASE("tmdb_edge errors") {
  const std::map<std::string, double> pop{{"m1", 10}, {"bad", 11}};
  CHECK_THROWS_AS(tmdb_edge({}, {}, pop), EmptyFilmography);
  CHECK_THROWS_AS(tmdb_edge({"m9"}, {"m9"}, pop), OutOfRange);
  CHECK_THROWS_AS(tmdb_edge({"bad"}, {"bad"}, pop), OutOfRange);
  // One empty filmography is fine: there is just no edge.
  CHECK_FALSE(tmdb_edge({}, {"m1"}, pop));
}

TEST_CASE("property: tmdb_edge bounds and monotonicity") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> score(1.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::string, double> pop;
    std::set<std::string> a, b;
    for (int i = 0; i < 9; ++i) {
      const std::string m = "m" + std::to_string(i);
      pop[m] = score(rng);
      if (rng() % 2) a.insert(m);
      if (rng() % 2) b.insert(m);
    }
    if (a.empty() && b.empty()) continue;
    const auto e = tmdb_edge(a, b, pop);
    if (!e) continue;
    CHECK(e->p >= 0.0);
    CHECK(e->p <= 1.0);
    for (auto& [m, s] : pop) {
      const double old = s;
      s = std::min(10.0, s + 1.0);
      CHECK(tmdb_edge(a, b, pop)->w >= e->w);
      s = old;
    }
  }
}
