#pragma once

// Chow ring of a complete intersection X in P^N, truncated at h^{n+1} = 0,
// with coefficients in Z[d1, ..., dc].

#include <vector>

#include "jetci/polyring.hpp"

namespace jetci {

/// Dimensions of X = H1 ∩ ... ∩ Hc ⊂ P^N. Validated once at construction:
/// n + c = N, n >= 1, c >= 1; kappa = ceil(n / c) and n = (kappa - 1) c + b.
class ModelParams {
 public:
  ModelParams(int N, int n);

  int N() const { return N_; }
  int n() const { return n_; }
  int c() const { return c_; }
  int kappa() const { return kappa_; }
  int b() const { return b_; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int N_;
  int n_;
  int c_;
  int kappa_;
  int b_;
};

/// sum_j coeffs[j] h^j with j = 0..n.
class ChowClass {
 public:
  explicit ChowClass(const ModelParams& params);
  ChowClass(const ModelParams& params, std::vector<MultidegreePoly> coeffs);

  static ChowClass one(const ModelParams& params);
  /// coeff * h^j (zero when j > n).
  static ChowClass pure(const ModelParams& params, int j, const MultidegreePoly& coeff);
  static ChowClass h_power(const ModelParams& params, int j);

  const ModelParams& params() const { return params_; }
  const std::vector<MultidegreePoly>& coeffs() const { return coeffs_; }
  const MultidegreePoly& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;
  /// True when only the h^j coefficient may be nonzero.
  bool is_pure(int j) const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const BigInt& scalar);
  friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
  friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
  friend ChowClass operator*(ChowClass lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs);
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  ChowClass pow(int exponent) const;

 private:
  void require_same_params(const ChowClass& other) const;

  ModelParams params_;
  std::vector<MultidegreePoly> coeffs_;
};

ChowClass chow_mul(const ChowClass& x, const ChowClass& y);

/// Pairing with the fundamental class: x_n * d1 * ... * dc.
MultidegreePoly integrate(const ChowClass& x);

/// s_0..s_n of Omega_X(m), by truncated series multiplication of
/// (1 + (1-m)h)^{-(N+1)} (1 - mh) prod_i (1 + (d_i - m)h).
std::vector<ChowClass> segre_cotangent(const ModelParams& params, int twist);

/// h^j coefficient of s_j(Omega_X) from sum_k binom(N+k, N) (-1)^k e_{j-k}.
MultidegreePoly segre_closed_form(const ModelParams& params, int j);

/// s_i(E ⊗ L) = sum_j binom(r-1+i, i-j) s_j(E) c1(L)^{i-j}. L_class must be
/// of pure h-degree 1.
std::vector<ChowClass> twist_segre(const std::vector<ChowClass>& s_seq, int rank, const ChowClass& l_class);

/// c_0..c_n of ⊕_i O(d_i + shifts_i): c_l = e_l(d + shift) h^l.
std::vector<ChowClass> chern_line_sum(const ModelParams& params, const std::vector<int>& shifts);

}  // namespace jetci
