#include "jetci/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jetci/chow.hpp"
#include "jetci/jet_tower.hpp"

namespace jetci {

namespace {

BigInt factorial(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt power_of_two(long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

}  // namespace

Rational monic_root_bound(std::span<const Rational> lower_coeffs) {
  if (lower_coeffs.empty()) throw std::invalid_argument("monic_root_bound: polynomial must have degree >= 1");
  Rational largest = 0;
  for (const Rational& a : lower_coeffs) largest = std::max(largest, Rational(abs(a)));
  return 1 + largest;
}

BigInt D_coeff(int N, int n, int a, int j) {
  const int c = N - n;
  if (n < 1 || n > c) {
    throw std::invalid_argument("D_coeff: requires 1 <= n <= c (got N=" + std::to_string(N) +
                                ", n=" + std::to_string(n) + ")");
  }
  if (j < 0 || j > n) throw std::invalid_argument("D_coeff: j=" + std::to_string(j) + " outside 0.." + std::to_string(n));
  BigInt sum = 0;
  for (int i = 0; i <= n - j; ++i) {
    // 2^{i-1}(2 - i(2+a)) = 2^i - i(2+a)2^{i-1}
    BigInt weight = power_of_two(i);
    if (i >= 1) weight -= BigInt(i) * BigInt(2 + a) * power_of_two(i - 1);
    BigInt term = weight * binomial(2 * n - 1, i) * binomial(N + n - i - j, N);
    if (i % 2 == 1) term = -term;
    sum += term;
  }
  if ((n - j) % 2 == 1) sum = -sum;
  return sum;
}

MultidegreePoly morse_closed_form(int N, int n, int a) {
  std::vector<std::pair<int, BigInt>> coeffs;
  for (int j = n; j >= 0; --j) coeffs.emplace_back(j, D_coeff(N, n, a, j));
  return combine_elementary(coeffs, N - n);
}

Rational symmetric_positivity_threshold(const std::vector<std::pair<int, Rational>>& coeffs, int c, int k) {
  if (k < 0 || k > c) throw std::invalid_argument("symmetric_positivity_threshold: need 0 <= k <= c");
  std::map<int, Rational> by_index;
  for (const auto& [j, v] : coeffs) {
    if (j < 0 || j > k) throw std::invalid_argument("symmetric_positivity_threshold: index outside 0..k");
    by_index[j] += v;
  }
  if (by_index[k] != 1) {
    throw std::invalid_argument("symmetric_positivity_threshold: leading coefficient a_k must be 1 (divide first)");
  }
  const Rational top = Rational(binomial(c, k));
  Rational largest = 0;
  for (int i = 0; i < k; ++i) {
    auto it = by_index.find(i);
    if (it == by_index.end()) continue;
    largest = std::max(largest, Rational(abs(it->second * Rational(binomial(c, i)) / top)));
  }
  return 1 + largest;
}

std::optional<Rational> shift_positivity_threshold(const MultidegreePoly& p) {
  const int c = p.num_vars();
  // x-exponents -> coefficients of r^0, r^1, ...
  std::map<Exponents, std::vector<BigInt>> shifted;
  for (const auto& [exps, coeff] : p.terms()) {
    Exponents take(static_cast<std::size_t>(c), 0);
    // enumerate t <= exps componentwise: (x_i + r)^{e_i} = sum binom(e_i, t_i) x_i^{t_i} r^{e_i - t_i}
    while (true) {
      BigInt weight = coeff;
      int r_degree = 0;
      for (int i = 0; i < c; ++i) {
        weight *= binomial(exps[i], take[i]);
        r_degree += exps[i] - take[i];
      }
      auto& column = shifted[take];
      if (static_cast<int>(column.size()) <= r_degree) column.resize(static_cast<std::size_t>(r_degree + 1), 0);
      column[static_cast<std::size_t>(r_degree)] += weight;

      int pos = 0;
      while (pos < c && take[pos] == exps[pos]) take[pos++] = 0;
      if (pos == c) break;
      ++take[pos];
    }
  }

  Rational threshold = 1;
  bool constant_positive = false;
  for (auto& [alpha, column] : shifted) {
    while (!column.empty() && column.back() == 0) column.pop_back();
    const bool is_constant_part = std::all_of(alpha.begin(), alpha.end(), [](int e) { return e == 0; });
    if (column.empty()) {
      if (is_constant_part) return std::nullopt;
      continue;
    }
    const BigInt lead = column.back();
    if (lead < 0) return std::nullopt;
    if (is_constant_part) constant_positive = true;
    if (column.size() == 1) continue;
    std::vector<Rational> monic;
    for (std::size_t i = 0; i + 1 < column.size(); ++i) monic.emplace_back(Rational(column[i]) / Rational(lead));
    threshold = std::max(threshold, monic_root_bound(monic));
  }
  if (!constant_positive) return std::nullopt;
  return threshold;
}

Rational gamma_dim2(int N, int a) {
  if (N < 4) {
    throw std::domain_error("gamma_dim2: needs N >= 4 (D_a^{N,2,0} >= 0 and N - 3 > 0); got N=" + std::to_string(N));
  }
  Rational out(BigInt(2) * BigInt(N + 1 + 3 * a), BigInt(N - 3));
  out.canonicalize();
  return out;
}

Rational gamma_rough(int N, int n, int a) {
  if (n < 1) throw std::domain_error("gamma_rough: n must be >= 1");
  if (N < 2 * n) {
    throw std::domain_error("gamma_rough: needs N >= 2n for (N-2n)!; got N=" + std::to_string(N) +
                            ", n=" + std::to_string(n));
  }
  Rational first(power_of_two(n - 1) * BigInt(n * (2 + a) - 2) * BigInt(n) * BigInt(n), BigInt(N + 1));
  first.canonicalize();
  first = first * Rational(binomial(2 * n - 1, n)) + 1;
  Rational ratio(factorial(N + n) * factorial(N - 2 * n), factorial(N) * factorial(N - n));
  ratio.canonicalize();
  Rational out = first * Rational(binomial(n, n / 2)) * ratio;
  out.canonicalize();
  return out;
}

BigInt gamma_limit_bound(int n) {
  return power_of_two(n - 1) * BigInt(n) * BigInt(n) * BigInt(n) * binomial(2 * n - 1, n) * binomial(n, n / 2);
}

BigInt gamma_rough_limit(int n) {
  return (power_of_two(n - 1) * BigInt(n) * BigInt(n) * BigInt(n) * binomial(2 * n - 1, n) + 1) * binomial(n, n / 2);
}

Rational delta_for_main_theorem(int N, int n, int a) {
  if (n == 2) return gamma_dim2(N, a + N);
  return gamma_rough(N, n, a + N);
}

BigInt ceil_rational(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::rough: return "rough";
    case BoundMethod::dim2: return "dim2";
    case BoundMethod::scan: return "scan";
  }
  return "unknown";
}

BoundMethod parse_bound_method(const std::string& text) {
  if (text == "rough") return BoundMethod::rough;
  if (text == "dim2") return BoundMethod::dim2;
  if (text == "scan") return BoundMethod::scan;
  throw std::invalid_argument("unknown bound method '" + text + "' (expected rough, dim2 or scan)");
}

BoundReport bound_report(int N, int n, int a, BoundMethod method, std::optional<int> d_max) {
  const ModelParams params(N, n);
  BoundReport report;
  report.N = N;
  report.n = n;
  report.a = a;
  report.method = method;
  if (n <= params.c()) {
    for (int j = 0; j <= n; ++j) report.coefficients.push_back(D_coeff(N, n, a, j));
  }
  switch (method) {
    case BoundMethod::dim2:
      if (n != 2) throw std::domain_error("bound: method dim2 applies to surfaces only (n = 2)");
      report.gamma = gamma_dim2(N, a);
      break;
    case BoundMethod::rough:
      if (n > params.c()) throw std::domain_error("bound: method rough requires n <= c");
      report.gamma = gamma_rough(N, n, a);
      break;
    case BoundMethod::scan: {
      constexpr int kDefaultWindow = 10000;
      int limit = kDefaultWindow;
      if (d_max) {
        limit = *d_max;
      } else if (n <= params.c()) {
        const BigInt rough = ceil_rational(gamma_rough(N, n, a));
        limit = rough < kDefaultWindow ? static_cast<int>(rough.get_si()) + 1 : kDefaultWindow;
      }
      report.scan_limit = limit;
      const auto frontier = kappa_degree_search(params, a, limit);
      report.found = frontier.has_value();
      report.gamma = frontier ? Rational(*frontier) : Rational(0);
      break;
    }
  }
  return report;
}

}  // namespace jetci
