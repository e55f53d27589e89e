#include "subcount/estimator.hpp"
#include "subcount/instances.hpp"
#include "subcount/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace subcount;
using testing_support::parse;

namespace {

EstimationConfig sampled(double eps, double c, std::size_t rounds, std::uint64_t seed = 1) {
  EstimationConfig cfg;
  cfg.epsilon = eps;
  cfg.c = c;
  cfg.rounds = rounds;
  cfg.seed = seed;
  cfg.allow_fallback = false;
  return cfg;
}

std::string without_time(const std::string& line) { return line.substr(0, line.rfind(" time_ms=")); }

}  // namespace

TEST_CASE("default round counts") {
  CHECK(default_rounds(1) == 9);
  CHECK(default_rounds(3) == 15);
  CHECK(default_rounds(100) == 57);
  CHECK(default_rounds(1000000000) == 61);
  for (std::size_t n = 1; n < 5000; n += 37) {
    std::size_t r = default_rounds(n);
    CHECK(r % 2 == 1);
    CHECK(r >= 9);
    CHECK(r <= 61);
  }
}

TEST_CASE("draw counts") {
  Decomposition k3 = decompose(make_clique(3));
  CHECK(draws_for(k3, sampled(0.5, 1, 1), 100, 10) == 400);
  CHECK(draws_for(k3, sampled(0.5, 1, 1), 100, 1e9) == 1);
  EstimationConfig fast = sampled(0.5, 1, 1);
  fast.star_fast = true;
  Decomposition s2 = decompose(make_star(2));
  // c * 4 * 2^4 * m / (eps^2 * sqrt(h)) = 64 * 100 / (0.25 * 10)
  CHECK(draws_for(s2, fast, 100, 100) == 2560);
}

TEST_CASE("config validation") {
  EstimationConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.epsilon = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.rounds = 4;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.c = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.h_hint = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("a single-draw average is the draw itself") {
  Graph g = make_clique(5).graph();
  Pattern h = make_clique(3);
  Decomposition d = decompose(h);
  SubgraphSampler sampler(h, d, false);
  for (std::uint64_t seed = 1; seed < 50; ++seed) {
    QuerySession a(g, seed), b(g, seed);
    auto avg = averaged_estimate(a, sampler, 1);
    REQUIRE(avg);
    CHECK(*avg == sampler.draw(b));
  }
  QuerySession limited(g, 1);
  limited.set_query_limit(0);
  CHECK_FALSE(averaged_estimate(limited, sampler, 1).has_value());
}

TEST_CASE("sampled estimates on small inputs") {
  SUBCASE("triangles in K4") {
    auto r = count_subgraph(make_clique(4).graph(), make_clique(3), sampled(0.25, 16, 5));
    CHECK_FALSE(r.fallback_used);
    CHECK(r.estimate == doctest::Approx(4).epsilon(0.25));
    CHECK(r.f == Rational(1));
    CHECK(r.rho == Rational(3, 2));
  }
  SUBCASE("one pentagon") {
    EstimationConfig cfg = sampled(0.25, 16, 5);
    cfg.h_hint = 1;
    auto r = count_subgraph(make_cycle(5).graph(), make_cycle(5), cfg);
    CHECK(r.estimate == doctest::Approx(1).epsilon(0.25));
    CHECK(r.h_trace.size() == 1);
  }
  SUBCASE("no copies") {
    auto r = count_subgraph(make_cycle(8).graph(), make_clique(3), sampled(0.5, 1, 3));
    CHECK(r.estimate == 0);
    CHECK_FALSE(r.fallback_used);
  }
}

TEST_CASE("tiny graphs fall back to exact counting") {
  Graph g = gen_random(8, 10, 3);
  Pattern h = make_clique(3);
  auto r = count_subgraph(g, h, EstimationConfig{});
  CHECK(r.fallback_used);
  CHECK(r.estimate == static_cast<double>(count_copies(g, h.graph())));
  CHECK(r.queries.pair >= g.num_edges());
}

TEST_CASE("an empty graph has no copies") {
  auto r = count_subgraph(parse("5 0\n"), make_clique(3), EstimationConfig{});
  CHECK(r.estimate == 0);
}

TEST_CASE("budget exhaustion is reported") {
  EstimationConfig cfg = sampled(0.5, 1, 3);
  cfg.budget_factor = 1e-12;
  cfg.h_hint = 1;
  CHECK_THROWS_AS(count_subgraph(make_clique(6).graph(), make_clique(3), cfg), BudgetExhausted);
}

TEST_CASE("queries stay within the per-round budget") {
  Pattern h = make_clique(3);
  Decomposition d = decompose(h);
  const double qbar = expected_draw_queries(h, d);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Graph g = gen_random(60, 400, seed);
    EstimationConfig cfg = sampled(0.5, 2, 3, seed);
    cfg.budget_factor = 2;
    auto r = count_subgraph(g, h, cfg);
    double cap = 0;
    for (const auto& step : r.h_trace) {
      cap += static_cast<double>(r.rounds) * cfg.budget_factor * static_cast<double>(step.k) * qbar;
    }
    CHECK(static_cast<double>(r.queries.total()) <= cap);
  }
}

TEST_CASE("colorful counting on join instances") {
  Pattern k3 = make_clique(3);
  JoinInstance g0 = gen_join_lowerbound(k3, 16, JoinWhich::G0, 1);
  JoinInstance g1 = gen_join_lowerbound(k3, 16, JoinWhich::G1, 1);

  auto e0 = count_colorful(g0.graph, g0.pattern, EstimationConfig{});
  auto e1 = count_colorful(g1.graph, g1.pattern, EstimationConfig{});
  CHECK(e0.estimate == 0);
  CHECK(e1.estimate == doctest::Approx(4));

  EstimationConfig cfg = sampled(0.5, 4, 5);
  cfg.h_hint = 4;
  auto s0 = count_colorful(g0.graph, g0.pattern, cfg);
  auto s1 = count_colorful(g1.graph, g1.pattern, cfg);
  CHECK(s0.estimate == 0);
  CHECK(s1.estimate == doctest::Approx(4).epsilon(0.5));
}

TEST_CASE("single-color inputs count like uncolored ones") {
  Graph plain = gen_random(12, 30, 5);
  std::vector<Edge> edges = plain.edges();
  std::vector<Color> colors(edges.size(), 0);
  Graph mono = Graph::from_edges(12, edges, colors);
  Graph hg = make_clique(3).graph();
  Pattern hmono(Graph::from_edges(3, hg.edges(), std::vector<Color>(3, 0)));

  auto a = count_subgraph(plain, make_clique(3), EstimationConfig{});
  auto b = count_colorful(mono, hmono, EstimationConfig{});
  CHECK(a.estimate == b.estimate);

  EstimationConfig cfg = sampled(0.5, 1, 3, 9);
  cfg.h_hint = std::max(1.0, a.estimate);
  auto sa = count_subgraph(plain, make_clique(3), cfg);
  auto sb = count_colorful(mono, hmono, cfg);
  CHECK(sa.estimate == sb.estimate);
}

TEST_CASE("color mode mismatches are rejected") {
  Graph g = make_clique(4).graph();
  CHECK_THROWS_AS(count_colorful(g, make_clique(3), EstimationConfig{}), ColorModeError);
  EstimationConfig cfg;
  cfg.colored = true;
  CHECK_THROWS_AS(count_subgraph(g, make_clique(3), cfg), ColorModeError);
}

TEST_CASE("fast star counting") {
  SUBCASE("two-petal stars in K10") {
    EstimationConfig cfg = sampled(0.1, 1, 9);
    cfg.h_hint = 360;
    auto r = star_fast_count(make_clique(10).graph(), make_star(2), cfg);
    CHECK(r.estimate >= 324);
    CHECK(r.estimate <= 396);
  }
  SUBCASE("single edges count the edges") {
    Graph g = gen_random(200, 1000, 7);
    EstimationConfig cfg = sampled(0.25, 1, 5);
    cfg.h_hint = 1000;
    auto r = star_fast_count(g, make_star(1), cfg);
    CHECK(r.estimate == doctest::Approx(1000).epsilon(0.25));
  }
  SUBCASE("non-stars are rejected") {
    CHECK_THROWS_AS(star_fast_count(make_clique(4).graph(), make_clique(3), EstimationConfig{}),
                    NotAStarError);
    CHECK_THROWS_AS(star_fast_count(make_clique(4).graph(), make_path(4), EstimationConfig{}),
                    NotAStarError);
  }
}

TEST_CASE("equal seeds give equal reports") {
  Graph g = gen_random(80, 500, 2);
  EstimationConfig cfg = sampled(0.5, 2, 5, 42);
  auto a = count_subgraph(g, make_clique(3), cfg);
  auto b = count_subgraph(g, make_clique(3), cfg);
  CHECK(without_time(a.line()) == without_time(b.line()));
  CHECK(a.queries == b.queries);
  cfg.seed = 43;
  auto c = count_subgraph(g, make_clique(3), cfg);
  CHECK(without_time(a.line()) != without_time(c.line()));
}

TEST_CASE("result line format") {
  EstimateReport r;
  r.estimate = 12;
  r.f = Rational(1, 6);
  r.rho = Rational(2);
  r.rounds = 9;
  r.k_used = 5;
  CHECK(r.line() ==
        "estimate=12 f=1/6 rho=2 rounds=9 k=5 fallback=0 q_degree=0 q_neighbor=0 q_pair=0 "
        "q_edge=0 time_ms=0");
}
