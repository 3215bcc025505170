#include <random>

#include "doctest.h"
#include "jetci/bounds.hpp"
#include "jetci/jet_tower.hpp"

using namespace jetci;

namespace {

MultidegreePoly d(int c, int i) { return MultidegreePoly::variable(c, i); }
MultidegreePoly k(int c, long v) { return MultidegreePoly::constant(c, v); }

JetClass sum_of_ells(const JetTower& tower, int level) {
  JetClass sum(tower.params(), level);
  for (int i = 1; i <= level; ++i) sum += tower.ell_class(i).lift(level);
  return sum;
}

}  // namespace

TEST_CASE("recursion coefficients") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l <= 6; ++l) CHECK(M_coeff(n, l, l) == 1);
  }
  CHECK(M_coeff(2, 1, 0) == 0);
  CHECK(M_coeff(3, 2, 0) == 2);
  CHECK(M_coeff(3, 3, 1) == 4);
  CHECK_THROWS_AS(M_coeff(3, 1, 2), std::invalid_argument);
  CHECK(jet_dimension(2, 1) == 3);
  CHECK(jet_dimension(3, 2) == 7);
}

TEST_CASE("Segre expansion on the tower") {
  const ModelParams p(5, 3);
  const JetTower tower(p);
  CHECK(tower.expand_segre(0, 2) == JetClass::base_segre(p, 0, 2));
  CHECK(tower.expand_segre(1, 0) == JetClass::one(p, 1));
  CHECK(tower.expand_segre(1, 1) ==
        JetClass::base_segre(p, 1, 1) + JetClass::u(p, 1, 1) * M_coeff(3, 1, 0));
  CHECK(tower.expand_segre(1, -1).is_zero());
}

TEST_CASE("pushforward rule") {
  const ModelParams p(5, 3);
  const JetTower tower(p);
  const auto u = JetClass::u(p, 1, 1);
  CHECK(tower.pushforward_once(u.pow(2)) == JetClass::one(p, 0));
  CHECK(tower.pushforward_once(u).is_zero());
  CHECK(tower.pushforward_once(u.pow(3)) == JetClass::base_segre(p, 0, 1));
}

TEST_CASE("integration on the tower") {
  const ModelParams p(4, 2);
  const JetTower tower(p);
  CHECK(tower.integrate_jet(JetClass::h(p, 0).pow(2)) == d(2, 0) * d(2, 1));
  CHECK(tower.integrate_jet(JetClass::u(p, 1, 1).pow(3)) == segre_closed_form(p, 2) * (d(2, 0) * d(2, 1)));
  const auto l1 = tower.ell_class(1);
  const auto expected = d(2, 0).pow(2) * d(2, 1).pow(2) + d(2, 0).pow(2) * d(2, 1) +
                        d(2, 0) * d(2, 1).pow(2) - k(2, 3) * d(2, 0) * d(2, 1);
  CHECK(tower.integrate_jet(l1.pow(3)) == expected);

  IntegrationDiagnostics diag;
  tower.integrate_jet(l1.pow(2), &diag);
  CHECK(diag.dropped_low_degree);
}

TEST_CASE("nef classes on the tower") {
  const ModelParams p(5, 4);
  const JetTower tower(p);
  CHECK(tower.ell_class(1) == JetClass::u(p, 1, 1) + JetClass::h(p, 1) * BigInt(2));
  CHECK(tower.ell_class(2) ==
        JetClass::u(p, 2, 2) + JetClass::u(p, 2, 1) * BigInt(2) + JetClass::h(p, 2) * BigInt(6));
  CHECK_THROWS_AS(tower.ell_class(0), std::invalid_argument);
  for (int kappa = 1; kappa <= 4; ++kappa) {
    const auto sum = sum_of_ells(tower, kappa);
    Exponents h_key(static_cast<std::size_t>(1 + p.n() + kappa), 0);
    h_key[0] = 1;
    long m = 1;
    for (int i = 0; i < kappa; ++i) m *= 3;
    CHECK(sum.coefficient(h_key) == m - 1);
  }
}

TEST_CASE("Morse certificate") {
  const JetTower tower(ModelParams(4, 2));
  const auto cert = tower.morse_certificate(4, {34, 34});
  CHECK(cert.difference == d(2, 0) * d(2, 1) - k(2, 17) * (d(2, 0) + d(2, 1)) + k(2, 15));
  CHECK(*cert.value == 15);
  CHECK(*cert.positive);
  const auto below = tower.morse_certificate(4, {33, 33});
  CHECK(*below.value == -18);
  CHECK_FALSE(*below.positive);
  CHECK(tower.morse_certificate(0).difference == d(2, 0) * d(2, 1) - k(2, 5) * (d(2, 0) + d(2, 1)) + k(2, 3));
  CHECK(cert.m == 2);

  const JetTower three(ModelParams(6, 3));
  const auto e = [](int i) { return elementary_symmetric(i, 3); };
  CHECK(three.morse_certificate(0).difference == e(3) - k(3, 7) * e(2) - k(3, 12) * e(1) + k(3, 36));
}

TEST_CASE("kappa one certificate equals the closed form") {
  for (int c = 1; c <= 5; ++c) {
    for (int n = 1; n <= c; ++n) {
      const JetTower tower(ModelParams(n + c, n));
      for (int a : {0, 1, n + c}) CHECK(tower.morse_certificate(a).difference == morse_closed_form(n + c, n, a));
    }
  }
}

TEST_CASE("uniform degree search") {
  CHECK(kappa_degree_search(ModelParams(4, 2), 4, 200) == 34);
  CHECK(kappa_degree_search(ModelParams(4, 2), 0, 200) == 10);
  CHECK_FALSE(kappa_degree_search(ModelParams(4, 2), 4, 20).has_value());
  for (int N = 4; N <= 12; ++N) {
    for (int a = 0; a <= 6; ++a) {
      const auto frontier = kappa_degree_search(ModelParams(N, 2), a, 500);
      REQUIRE(frontier.has_value());
      CHECK(BigInt(*frontier) <= ceil_rational(gamma_dim2(N, a)));
    }
  }
}

TEST_CASE("integrals of full-dimensional classes have degree at most N") {
  std::mt19937_64 rng(3);
  for (const auto& [N, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 3}, {5, 4}, {6, 3}}) {
    const ModelParams p(N, n);
    const JetTower tower(p);
    const int kappa = p.kappa();
    const int top = jet_dimension(n, kappa);
    for (int trial = 0; trial < 10; ++trial) {
      JetClass product = JetClass::one(p, kappa);
      std::uniform_int_distribution<int> pick(0, kappa);
      for (int f = 0; f < top; ++f) {
        const int which = pick(rng);
        product = product * (which == 0 ? JetClass::h(p, kappa) : tower.ell_class(which).lift(kappa));
      }
      const Degree deg = tower.integrate_jet(product).total_degree();
      CHECK((!deg || *deg <= N));
    }
  }
}

TEST_CASE("classes times h integrate to lower order") {
  std::mt19937_64 rng(4);
  for (const auto& [N, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 3}, {6, 4}}) {
    const ModelParams p(N, n);
    const JetTower tower(p);
    const int kappa = p.kappa();
    for (int trial = 0; trial < 10; ++trial) {
      JetClass product = JetClass::h(p, kappa);
      std::uniform_int_distribution<int> pick(1, kappa);
      for (int f = 1; f < jet_dimension(n, kappa); ++f) product = product * tower.ell_class(pick(rng)).lift(kappa);
      const Degree deg = tower.integrate_jet(product).total_degree();
      CHECK((!deg || *deg < N));
    }
  }
}

TEST_CASE("one tower step preserves the leading integral") {
  for (int N = 3; N <= 7; ++N) {
    for (int n = 2; n < N; ++n) {
      const ModelParams p(N, n);
      const int kappa = p.kappa();
      if (kappa < 2 || kappa > 4) continue;
      const JetTower tower(p);
      const int c = p.c(), b = p.b();
      const int c_hat = c + n - 1;
      for (int level = 1; level < kappa; ++level) {
        JetClass lhs = tower.expand_segre(level, b) * tower.expand_segre(level, c).pow(kappa - level - 1);
        for (int i = 1; i <= level; ++i) lhs = lhs * tower.ell_class(i).lift(level).pow(c_hat);
        JetClass rhs = tower.expand_segre(level - 1, b) * tower.expand_segre(level - 1, c).pow(kappa - level);
        for (int i = 1; i < level; ++i) rhs = rhs * tower.ell_class(i).lift(level - 1).pow(c_hat);
        const auto left = tower.integrate_jet(lhs);
        const auto right = tower.integrate_jet(rhs);
        INFO("N=" << N << " n=" << n << " level=" << level);
        CHECK(left.dominant_part() == right.dominant_part());
        CHECK(left.total_degree() == N);
      }
    }
  }
}

TEST_CASE("rendering is deterministic") {
  const ModelParams p(4, 2);
  const JetTower tower(p);
  const auto x = tower.ell_class(1).pow(2);
  CHECK(x.to_string() == tower.ell_class(1).pow(2).to_string());
  CHECK_FALSE(x.to_string().empty());
}
