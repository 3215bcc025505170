#include "doctest.h"
#include "jetci/chow.hpp"

using namespace jetci;

namespace {

MultidegreePoly d(int c, int i) { return MultidegreePoly::variable(c, i); }
MultidegreePoly k(int c, long v) { return MultidegreePoly::constant(c, v); }

}  // namespace

TEST_CASE("model parameters") {
  const ModelParams p(7, 5);
  CHECK(p.c() == 2);
  CHECK(p.kappa() == 3);
  CHECK(p.b() == 1);
  CHECK_THROWS_AS(ModelParams(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(4, 0), std::invalid_argument);
}

TEST_CASE("multiplication truncates and integrates with the Bezout degree") {
  const ModelParams p2(4, 2);
  const auto h = ChowClass::h_power(p2, 1);
  CHECK((h * ChowClass::h_power(p2, 2)).is_zero());
  CHECK(ChowClass::one(p2) * h == h);
  CHECK(integrate(ChowClass::h_power(p2, 2)) == d(2, 0) * d(2, 1));
  CHECK(integrate(h).is_zero());
  CHECK(integrate(ChowClass::pure(p2, 2, d(2, 0) + d(2, 1))) ==
        d(2, 0) * d(2, 0) * d(2, 1) + d(2, 0) * d(2, 1) * d(2, 1));

  const ModelParams p1(3, 1);
  const auto x = ChowClass::one(p1) + ChowClass::pure(p1, 1, d(2, 0));
  const auto y = ChowClass::one(p1) + ChowClass::pure(p1, 1, d(2, 1));
  CHECK(x * y == ChowClass::one(p1) + ChowClass::pure(p1, 1, d(2, 0) + d(2, 1)));
  CHECK_THROWS_AS(chow_mul(x, h), std::invalid_argument);
}

TEST_CASE("Segre classes of the twisted cotangent bundle") {
  const ModelParams p(4, 2);
  const auto s = segre_cotangent(p, 0);
  CHECK(s[0].coeff(0) == k(2, 1));
  CHECK(s[1].coeff(1) == d(2, 0) + d(2, 1) - k(2, 5));
  CHECK(s[2].coeff(2) == d(2, 0) * d(2, 1) - k(2, 5) * (d(2, 0) + d(2, 1)) + k(2, 15));

  const ModelParams q(3, 2);
  const auto t1 = segre_cotangent(q, 1);
  CHECK(t1[1].coeff(1) == d(1, 0) - k(1, 2));
  CHECK(t1[2].coeff(2) == k(1, 1) - d(1, 0));
  const auto tm2 = segre_cotangent(q, -2);
  CHECK(tm2[1].coeff(1) == d(1, 0) - k(1, 8));
  CHECK(tm2[2].coeff(2) == k(1, 46) - k(1, 10) * d(1, 0));
}

TEST_CASE("closed form matches the product formula") {
  for (int N = 2; N <= 10; ++N) {
    for (int c = 1; c < N; ++c) {
      const ModelParams p(N, N - c);
      const auto s = segre_cotangent(p, 0);
      for (int j = 0; j <= p.n(); ++j) CHECK(segre_closed_form(p, j) == s[static_cast<std::size_t>(j)].coeff(j));
    }
  }
  const ModelParams p(4, 2);
  CHECK(segre_closed_form(p, 1) == d(2, 0) + d(2, 1) - k(2, 5));
  CHECK_THROWS_AS(segre_closed_form(p, 3), std::invalid_argument);
}

TEST_CASE("twisting formula agrees with direct twisting") {
  for (int N = 2; N <= 6; ++N) {
    for (int c = 1; c < N; ++c) {
      const ModelParams p(N, N - c);
      const auto base = segre_cotangent(p, 0);
      for (int m = -3; m <= 3; ++m) {
        CHECK(twist_segre(base, p.n(), ChowClass::h_power(p, 1) * BigInt(m)) == segre_cotangent(p, m));
      }
      CHECK(twist_segre(base, p.n(), ChowClass(p)) == base);
    }
  }
  const ModelParams p(4, 2);
  CHECK_THROWS_AS(twist_segre(segre_cotangent(p, 0), 2, ChowClass::h_power(p, 2)), std::invalid_argument);
}

TEST_CASE("dominant part of the twisted Segre classes is elementary") {
  for (int N = 3; N <= 8; ++N) {
    for (int c = 1; c < N; ++c) {
      const ModelParams p(N, N - c);
      for (int m : {-4, -1, 0, 2}) {
        const auto s = segre_cotangent(p, m);
        for (int l = 1; l <= std::min(c, p.n()); ++l) {
          CHECK(s[static_cast<std::size_t>(l)].coeff(l).dominant_part() == elementary_symmetric(l, c));
        }
      }
    }
  }
}

TEST_CASE("Chern classes of a sum of line bundles") {
  const ModelParams p(5, 3);
  const auto c0 = chern_line_sum(p, {0, 0});
  CHECK(c0[1].coeff(1) == d(2, 0) + d(2, 1));
  CHECK(c0[2].coeff(2) == d(2, 0) * d(2, 1));
  const auto shifted = chern_line_sum(p, {-3, -3});
  CHECK(shifted[1].coeff(1) == d(2, 0) + d(2, 1) - k(2, 6));
}
