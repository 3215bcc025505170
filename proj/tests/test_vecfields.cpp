#include <random>

#include "doctest.h"
#include "jetci/vecfields.hpp"

using namespace jetci;

namespace {

std::map<Exponents, Rational> random_free_data(const UniversalChart& chart, int i, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(-5, 5);
  std::map<Exponents, Rational> data;
  for (const auto& alpha : chart.exponents(i)) {
    int w = 0;
    for (int e : alpha) w += e;
    if (w == 0 || w > chart.N() || (w == 1 && alpha[0] == 1)) continue;
    data[alpha] = value(rng);
  }
  return data;
}

}  // namespace

TEST_CASE("chart inventory") {
  const UniversalChart chart(2, {1, 2});
  CHECK(chart.exponents(1).size() == 3);
  CHECK(chart.exponents(2).size() == 6);
  CHECK(chart.num_vars() == 2 + 2 + 3 + 6);
  CHECK(chart.var_name(chart.coeff(2, {1, 1})) == "a2[1,1]");
  CHECK_THROWS_AS(chart.coeff(1, {2, 0}), std::out_of_range);
  CHECK_THROWS_AS(UniversalChart(2, {0}), std::invalid_argument);
}

TEST_CASE("defining equations") {
  const UniversalChart chart(2, {1});
  const auto eqs = defining_equations(chart);
  const auto a = [&](Exponents alpha) { return SymPoly::variable(chart.coeff(1, alpha)); };
  const auto z = [&](int j) { return SymPoly::variable(chart.z(j)); };
  const auto zp = [&](int j) { return SymPoly::variable(chart.z_prime(j)); };
  CHECK(eqs.f[0] == a({0, 0}) + a({1, 0}) * z(1) + a({0, 1}) * z(2));
  CHECK(eqs.f_prime[0] == a({1, 0}) * zp(1) + a({0, 1}) * zp(2));

  const UniversalChart quad(2, {2});
  const auto q = defining_equations(quad);
  const int a20 = quad.coeff(1, {2, 0});
  // Keep only the a_{(2,0)} part of f'.
  SymPoly part;
  for (const auto& [mono, coeff] : q.f_prime[0].terms()) {
    for (const auto& [var, e] : mono) {
      if (var == a20) part.add_term(mono, coeff);
    }
  }
  CHECK(part == SymPoly::variable(a20) * SymPoly::variable(quad.z(1)) * SymPoly::variable(quad.z_prime(1)) * Rational(2));
}

TEST_CASE("applying a field") {
  const UniversalChart chart(2, {2});
  VectorField t;
  t.attach(chart);
  t.set(chart.z(1), SymPoly::constant(1));
  const auto z1 = SymPoly::variable(chart.z(1));
  CHECK(apply(t, z1 * z1) == z1 * Rational(2));
  CHECK(apply(VectorField(), z1 * z1).is_zero());
  const auto g = z1 * SymPoly::variable(chart.z(2)), h = z1 * z1 * z1;
  CHECK(apply(t, g + h * Rational(3)) == apply(t, g) + apply(t, h) * Rational(3));
}

TEST_CASE("T_j fields are tangent") {
  const UniversalChart line(1, {1});
  const auto t1 = build_Tj(line, 1);
  CHECK(t1.coefficient(line.coeff(1, {0})) == -SymPoly::variable(line.coeff(1, {1})));
  CHECK(identically_tangent(line, t1));
  for (int N = 1; N <= 4; ++N) {
    for (int d1 = 1; d1 <= 3; ++d1) {
      for (int d2 = 0; d2 <= 3; ++d2) {
        std::vector<int> degrees{d1};
        if (d2) degrees.push_back(d2);
        const UniversalChart chart(N, degrees);
        for (int j = 1; j <= N; ++j) {
          const auto t = build_Tj(chart, j);
          CHECK(identically_tangent(chart, t));
          CHECK(t.pole_orders().a_degree <= 1);
        }
      }
    }
  }
  CHECK_THROWS_AS(build_Tj(line, 2), std::invalid_argument);
}

TEST_CASE("solved low-coefficient fields are tangent") {
  std::mt19937_64 rng(21);
  for (int N = 1; N <= 4; ++N) {
    for (int d = 1; d <= 3; ++d) {
      const UniversalChart chart(N, {d, 3});
      for (int i = 1; i <= 2; ++i) {
        const auto field = build_low_coeff_field(chart, i, random_free_data(chart, i, rng));
        CHECK(identically_tangent(chart, field));
        CHECK(field.pole_orders().z_degree <= N);
      }
    }
  }
  const UniversalChart chart(2, {2});
  CHECK(build_low_coeff_field(chart, 1, {}).is_zero());
  CHECK(build_low_coeff_field(chart, 1, {{{1, 1}, 0}}).is_zero());
  const UniversalChart big(2, {3});
  CHECK_THROWS_AS(build_low_coeff_field(big, 1, {{{3, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_low_coeff_field(big, 1, {{{1, 0}, 1}}), std::invalid_argument);
}

TEST_CASE("pole order audit on random instances") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = 1 + trial % 4;
    const int d = 1 + trial % 3;
    const UniversalChart chart(N, {d});
    const auto field = build_low_coeff_field(chart, 1, random_free_data(chart, 1, rng));
    CHECK(field.pole_orders().z_degree <= N);
    int actual = 0;
    for (const auto& [id, poly] : field.coefficients()) {
      actual = std::max(actual, poly.degree_in([&](int v) { return chart.variable(v).kind == VarKind::z; }));
    }
    CHECK(field.pole_orders().z_degree == actual);
  }
}

TEST_CASE("sampled tangency") {
  const UniversalChart chart(3, {2, 3});
  const auto t2 = build_Tj(chart, 2);
  const auto report = point_tangency_check(chart, t2, 100, 99);
  CHECK(report.all_zero());
  CHECK(report.checks == 400);
  CHECK(report.seed == 99);
  CHECK(point_tangency_check(chart, VectorField(), 20, 1).all_zero());

  std::mt19937_64 rng(23);
  const auto solved = build_low_coeff_field(chart, 2, random_free_data(chart, 2, rng));
  CHECK(point_tangency_check(chart, solved, 100, 5).all_zero());

  // Flip the sign of one coefficient: the sampled check must notice.
  VectorField corrupted = t2;
  const int target = chart.coeff(1, {0, 0, 0});
  corrupted.set(target, -corrupted.coefficient(target));
  CHECK_FALSE(point_tangency_check(chart, corrupted, 10, 7).all_zero());
}

TEST_CASE("higher-length and linear fields") {
  const UniversalChart chart(2, {3});
  const Exponents alpha{2, 1};
  const auto t0 = build_T_alpha_ell(chart, 1, alpha, {0, 0});
  REQUIRE(t0.coefficients().size() == 1);
  CHECK(t0.coefficient(chart.coeff(1, alpha)) == SymPoly::constant(1));
  const auto displayed = build_T_alpha_ell(chart, 1, alpha, {1, 0});
  const auto split = build_T_alpha_ell(chart, 1, alpha, {1, 0}, ShiftConvention::split);
  CHECK(displayed.coefficients().size() == 1);
  CHECK(split.coefficients().size() == 2);
  CHECK(displayed.pole_orders().z_degree <= chart.N());
  CHECK_THROWS_AS(build_T_alpha_ell(chart, 1, alpha, {2, 1}), std::invalid_argument);

  const std::vector<std::vector<Rational>> id{{1, 0}, {0, 1}};
  const auto euler = build_T_Lambda(chart, id);
  for (int k = 1; k <= 2; ++k) {
    CHECK(euler.coefficient(chart.z_prime(k)) == SymPoly::variable(chart.z_prime(k)));
  }
  CHECK(point_tangency_check(chart, euler, 20, 3).all_zero());
  const std::vector<std::vector<Rational>> singular{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(build_T_Lambda(chart, singular), std::invalid_argument);
}
