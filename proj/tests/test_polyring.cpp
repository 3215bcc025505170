#include <random>

#include "doctest.h"
#include "jetci/polyring.hpp"

using namespace jetci;

namespace {

MultidegreePoly d(int c, int i) { return MultidegreePoly::variable(c, i); }
MultidegreePoly k(int c, long v) { return MultidegreePoly::constant(c, v); }

MultidegreePoly random_poly(std::mt19937_64& rng, int c) {
  std::uniform_int_distribution<int> coeff(-6, 6), exp(0, 2), count(0, 5);
  MultidegreePoly p(c);
  for (int t = count(rng); t > 0; --t) {
    Exponents e(static_cast<std::size_t>(c));
    for (auto& x : e) x = exp(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical form and rendering") {
  MultidegreePoly p = d(2, 0) * d(2, 1) - k(2, 5) * (d(2, 0) + d(2, 1)) + k(2, 3);
  CHECK(p.to_string() == "d1*d2 - 5*d1 - 5*d2 + 3");
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string() == "0");
  CHECK((d(1, 0).pow(2) * d(1, 0)).to_string() == "d1^3");
  CHECK(p.total_degree() == 2);
  CHECK_FALSE(MultidegreePoly(3).total_degree().has_value());
  CHECK_THROWS_AS(MultidegreePoly(2).add_term({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(d(2, 0) + d(3, 0), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int c = 1 + trial % 3;
    const auto a = random_poly(rng, c), b = random_poly(rng, c), e = random_poly(rng, c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * e == a * (b * e));
    CHECK(a * (b + e) == a * b + a * e);
    CHECK(a + (-a) == MultidegreePoly(c));
  }
}

TEST_CASE("dominant part is multiplicative") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 2), b = random_poly(rng, 2);
    CHECK((a * b).dominant_part() == a.dominant_part() * b.dominant_part());
  }
}

TEST_CASE("evaluation") {
  const auto e2 = elementary_symmetric(2, 2);
  const std::vector<long> at34{34, 34};
  CHECK(e2.eval(std::span<const long>(at34)) == 1156);
  const auto q = d(1, 0).pow(2) - k(1, 34) * d(1, 0) + k(1, 15);
  CHECK(q.eval_uniform(BigInt(34)) == 15);
  const std::vector<long> zeros{0, 0};
  const auto p = d(2, 0) * d(2, 1) + k(2, 7);
  CHECK(p.eval(std::span<const long>(zeros)) == p.constant_term());
  const std::vector<long> bad{1};
  CHECK_THROWS_AS(p.eval(std::span<const long>(bad)), std::invalid_argument);
}

TEST_CASE("elementary symmetric basis") {
  CHECK(elementary_symmetric(0, 3) == k(3, 1));
  CHECK(elementary_symmetric(4, 3).is_zero());
  CHECK_THROWS_AS(elementary_symmetric(-1, 2), std::invalid_argument);
  using Coeffs = std::vector<std::pair<int, BigInt>>;
  const auto p = d(2, 0) * d(2, 1) - k(2, 5) * (d(2, 0) + d(2, 1)) + k(2, 3);
  CHECK(express_in_elementary(p) == Coeffs{{2, 1}, {1, -5}, {0, 3}});
  CHECK(express_in_elementary(elementary_symmetric(2, 4)) == Coeffs{{2, 1}});
  const auto morse = d(2, 0) * d(2, 1) - k(2, 17) * (d(2, 0) + d(2, 1)) + k(2, 15);
  CHECK(express_in_elementary(morse) == Coeffs{{2, 1}, {1, -17}, {0, 15}});
  CHECK(combine_elementary(express_in_elementary(morse), 2) == morse);
  CHECK_THROWS_AS(express_in_elementary(d(2, 0)), std::domain_error);
  CHECK_THROWS_AS(express_in_elementary(d(2, 0).pow(2)), std::domain_error);
}

TEST_CASE("series inverse") {
  const int c = 2;
  const auto c1 = d(c, 0), c2 = d(c, 1);
  const auto s = series_inverse({k(c, 1), c1, c2}, 3);
  CHECK(s[1] == c1);
  CHECK(s[2] == c1 * c1 - c2);
  CHECK(series_inverse(s, 3) == std::vector<MultidegreePoly>{k(c, 1), c1, c2, MultidegreePoly(c)});
  const auto zero = series_inverse({k(c, 1)}, 4);
  for (int i = 1; i <= 4; ++i) CHECK(zero[static_cast<std::size_t>(i)].is_zero());
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(4, -1) == 0);
}
