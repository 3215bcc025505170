#pragma once

// Effective degree thresholds. All arithmetic is exact (GMP rationals);
// integer degree thresholds are obtained by ceiling.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jetci/polyring.hpp"

namespace jetci {

/// For the monic x^k + a_{k-1} x^{k-1} + ... + a_0 (given as a_0..a_{k-1}):
/// 1 + max |a_i|. The polynomial is positive at every x at or above it.
Rational monic_root_bound(std::span<const Rational> lower_coeffs);

/// Coefficient D_a^{N,n,j} of e_j in the kappa = 1 Morse difference:
/// (-1)^{n-j} sum_{i=0}^{n-j} (-1)^i 2^{i-1}(2 - i(2+a)) binom(2n-1, i) binom(N+n-i-j, N),
/// with 2^{i-1}(2 - i(2+a)) evaluated as 2^i - i(2+a)2^{i-1} so i = 0 stays integral.
/// Requires 0 <= j <= n <= c = N - n.
BigInt D_coeff(int N, int n, int a, int j);

/// sum_j D_a^{N,n,j} e_j(d1, ..., dc), c = N - n.
MultidegreePoly morse_closed_form(int N, int n, int a);

/// Uniform threshold r for P = sum_j a_j e_j with a_k = 1 (k <= c):
/// r = 1 + max_{0 <= i < k} |a_i binom(c, i) / binom(c, k)|. P(d) > 0 whenever every d_i >= r.
Rational symmetric_positivity_threshold(const std::vector<std::pair<int, Rational>>& coeffs, int c, int k);

/// Threshold for an arbitrary polynomial: write P(r + x1, ..., r + xc) as a
/// polynomial in x whose coefficients are polynomials in r, and take the
/// largest monic root bound among them. Every coefficient is then positive at
/// r, so P > 0 whenever all d_i >= r. std::nullopt when some coefficient has a
/// negative leading term or P(r, ..., r) vanishes identically.
std::optional<Rational> shift_positivity_threshold(const MultidegreePoly& p);

/// 2(N + 1 + 3a)/(N - 3); domain error for N < 4.
Rational gamma_dim2(int N, int a);

/// (2^{n-1}(n(2+a)-2) n^2/(N+1) binom(2n-1,n) + 1) binom(n, floor(n/2)) (N+n)!(N-2n)!/(N!(N-n)!).
/// Domain error for N < 2n.
Rational gamma_rough(int N, int n, int a);

/// 2^{n-1} n^3 binom(2n-1, n) binom(n, floor(n/2)).
BigInt gamma_limit_bound(int n);

/// lim_{N -> inf} gamma_rough(N, n, N + a), which keeps the "+1" of the
/// first factor: (2^{n-1} n^3 binom(2n-1, n) + 1) binom(n, floor(n/2)).
BigInt gamma_rough_limit(int n);

/// Degree threshold fed to the cotangent ampleness argument: gamma_dim2(N, a + N) when n = 2, else gamma_rough(N, n, a + N).
Rational delta_for_main_theorem(int N, int n, int a);

/// Smallest integer >= q.
BigInt ceil_rational(const Rational& q);

enum class BoundMethod { rough, dim2, scan };

std::string to_string(BoundMethod method);
BoundMethod parse_bound_method(const std::string& text);

struct BoundReport {
  int N = 0;
  int n = 0;
  int a = 0;
  /// D_a^{N,n,j} for j = 0..n (empty when n > c).
  std::vector<BigInt> coefficients;
  Rational gamma;
  BoundMethod method = BoundMethod::rough;
  /// Upper end of the scan window (scan only).
  std::optional<int> scan_limit;
  /// False when a scan finds no frontier below scan_limit.
  bool found = true;
};

/// Computes the bound by the requested method. The scan uses the Morse
/// certificate from the jet tower and d_max (defaulting to a safe window).
BoundReport bound_report(int N, int n, int a, BoundMethod method, std::optional<int> d_max = std::nullopt);

}  // namespace jetci
