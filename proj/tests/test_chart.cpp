#include <doctest.h>

#include <random>

#include "ysl/chart.hpp"

using namespace ysl;

TEST_CASE("chart structure function is d*b") {
  for (long d : {1L, 2L, 3L}) {
    ChartFn structure = solve_chart_structure(d);
    ChartFn expect = ChartFn::b();
    expect.scale(KScalar(Rat(d)));
    INFO("d = ", d);
    CHECK(structure == expect);
  }
}

TEST_CASE("bracket is antisymmetric and satisfies Leibniz") {
  ChartFn structure = solve_chart_structure(2);
  std::mt19937_64 rng(7);
  auto rnd_fn = [&]() {
    ChartFn f;
    for (int t = 0; t < 3; ++t) {
      ChartFn mono = ChartFn::b(static_cast<int>(rng() % 5) - 2) *
                     ChartFn::c(static_cast<int>(rng() % 3));
      mono.scale(KScalar(Rat(static_cast<long>(rng() % 7) - 3)));
      f += mono;
    }
    return f;
  };
  for (int t = 0; t < 100; ++t) {
    ChartFn f = rnd_fn(), g = rnd_fn(), h = rnd_fn();
    CHECK(chart_bracket(f, g, structure) == -chart_bracket(g, f, structure));
    ChartFn lhs = chart_bracket(f, g * h, structure);
    ChartFn rhs = chart_bracket(f, g, structure) * h + g * chart_bracket(f, h, structure);
    CHECK(lhs == rhs);
    CHECK(chart_bracket(f, f, structure).is_zero());
  }
}

TEST_CASE("named bracket values") {
  for (long d : {1L, 2L, 3L}) {
    ChartFn structure = solve_chart_structure(d);
    // {c, b} = d b
    ChartFn cb = chart_bracket(ChartFn::c(), ChartFn::b(), structure);
    ChartFn db = ChartFn::b();
    db.scale(KScalar(Rat(d)));
    CHECK(cb == db);
    // {b, b} = 0
    CHECK(chart_bracket(ChartFn::b(), ChartFn::b(), structure).is_zero());
    // {Phi, c} = -d^{1/2} b
    auto ctx = make_sqrt_ctx({d});
    ChartFn phi = ChartFn::b();
    phi.scale(KScalar::inv_sqrt_sym(ctx, 0));
    ChartFn pc = chart_bracket(phi, ChartFn::c(), structure);
    ChartFn expect = ChartFn::b();
    expect.scale(-KScalar::sqrt_sym(ctx, 0));
    CHECK(pc == expect);
  }
}

TEST_CASE("moment map flow checks") {
  for (long d : {1L, 2L, 3L}) {
    auto checks = moment_flow_checks(d, 1234 + d);
    CHECK(checks.size() >= 8);
    for (const auto& c : checks) {
      INFO(c.label, " d=", d);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("quantum cross-oracle") {
  for (long d : {1L, 2L, 3L}) {
    ChartCheck c = chart_quantum_cross_check(d);
    INFO(c.label, " d=", d, " ", c.witness);
    CHECK(c.pass);
  }
}
