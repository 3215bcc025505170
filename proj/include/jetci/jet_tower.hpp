#pragma once

// Classes on the jet tower X_k -> X_{k-1} -> ... -> X_0 = X, where
// X_{j+1} = P(F_j) for the rank-n bundles F_j (F_0 = Omega_X).
//
// A JetClass is an integer combination of monomials
//     h^q * s_{0,1}^{e_1} ... s_{0,n}^{e_n} * u_1^{p_1} ... u_k^{p_k}
// where u_j = c1(O_{X_j}(1)) and s_{0,i} = s_i(Omega_X) are kept symbolic.
// Segre classes s_{m,i} with m >= 1 are always expanded through
//     s_{m,l} = sum_j M^n_{l,j} s_{m-1,j} u_m^{l-j}
// so they never appear in a stored term. Terms of cohomological degree above
// dim X_k = n + k(n-1) vanish and are dropped on insertion.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jetci/chow.hpp"
#include "jetci/polyring.hpp"

namespace jetci {

/// dim X_k = n + k(n - 1).
int jet_dimension(int n, int k);

/// M^n_{l,j} = sum_{i=0}^{l-j} (-1)^i binom(n-2+i+j, i). Memoized; safe to call
/// from several threads.
BigInt M_coeff(int n, int l, int j);

class JetClass {
 public:
  /// Exponent layout: [h, s_{0,1}, ..., s_{0,n}, u_1, ..., u_k].
  using Key = std::vector<int>;

  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };
  using TermMap = std::unordered_map<Key, BigInt, KeyHash>;

  JetClass(const ModelParams& params, int level);

  static JetClass one(const ModelParams& params, int level);
  static JetClass h(const ModelParams& params, int level);
  /// u_i pulled back to X_level (1 <= i <= level).
  static JetClass u(const ModelParams& params, int level, int i);
  /// The base Segre symbol s_{0,i} pulled back to X_level; 1 for i = 0, 0 for i < 0 or i > n.
  static JetClass base_segre(const ModelParams& params, int level, int i);

  const ModelParams& params() const { return params_; }
  int level() const { return level_; }
  /// n_k, the dimension of X_k.
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Weighted degree of a key: h and u_j weigh 1, s_{0,i} weighs i.
  int degree_of(const Key& key) const;
  BigInt coefficient(const Key& key) const;
  /// Adds a term; silently drops it when its degree exceeds n_k.
  void add_term(const Key& key, const BigInt& coeff);

  /// Pullback to a higher level of the tower.
  JetClass lift(int level) const;

  JetClass& operator+=(const JetClass& other);
  JetClass& operator-=(const JetClass& other);
  JetClass& operator*=(const BigInt& scalar);
  friend JetClass operator+(JetClass lhs, const JetClass& rhs) { return lhs += rhs; }
  friend JetClass operator-(JetClass lhs, const JetClass& rhs) { return lhs -= rhs; }
  friend JetClass operator*(JetClass lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend JetClass operator*(const BigInt& lhs, JetClass rhs) { return rhs *= lhs; }
  friend JetClass operator*(const JetClass& lhs, const JetClass& rhs);
  friend bool operator==(const JetClass& lhs, const JetClass& rhs);

  JetClass pow(int exponent) const;

  /// Deterministic rendering, e.g. "u1^3 + 2*h*u1 + s0_1".
  std::string to_string() const;

 private:
  void require_compatible(const JetClass& other) const;

  ModelParams params_;
  int level_;
  int max_degree_;
  TermMap terms_;
};

/// Result of an integration together with its bookkeeping.
struct IntegrationDiagnostics {
  /// Set when some term had degree below dim X_k and integrated to zero.
  bool dropped_low_degree = false;
  std::size_t dropped_terms = 0;
};

struct MorseCertificate {
  ModelParams params;
  int a = 0;
  /// Total h-weight 3^kappa - 1 of S = l_1 + ... + l_kappa.
  long long m = 0;
  /// (S^{n_kappa} - n_kappa S^{n_kappa - 1} (m + a) h) / deg X, an element of Z[d].
  MultidegreePoly difference;
  std::vector<BigInt> evaluated_at;
  std::optional<BigInt> value;
  std::optional<bool> positive;
};

/// Segre expansions, pushforwards and integrals on the jet tower of one model.
/// Expanded Segre classes are cached; the cache is mutex-guarded so one tower
/// can be shared between threads.
class JetTower {
 public:
  explicit JetTower(const ModelParams& params);

  const ModelParams& params() const { return params_; }

  /// s_{k,l} fully expanded at level k: k = 0 gives the bare symbol s_{0,l};
  /// l = 0 gives 1; l < 0 gives 0.
  JetClass expand_segre(int k, int l) const;

  /// pi_{k-1,k *}: u_k^{i+n-1} * beta -> s_{k-1,i} * beta.
  JetClass pushforward_once(const JetClass& x) const;

  /// Pushes down to X, substitutes s_{0,i} by s_i(Omega_X) and pairs with [X].
  MultidegreePoly integrate_jet(const JetClass& x, IntegrationDiagnostics* diagnostics = nullptr) const;

  /// Same integral divided by deg X = d1 ... dc (the h^n coefficient before
  /// the Bezout pairing).
  MultidegreePoly integrate_jet_normalized(const JetClass& x, IntegrationDiagnostics* diagnostics = nullptr) const;

  /// l_k = u_k + sum_{i<k} 2*3^{k-1-i} u_i + 2*3^{k-1} h, at level k.
  JetClass ell_class(int k) const;

  /// S^{n_kappa} - n_kappa S^{n_kappa-1} (3^kappa - 1 + a) h with S = l_1 + ... + l_kappa,
  /// integrated and normalized by deg X. Evaluated when degrees are given.
  MorseCertificate morse_certificate(int a, const std::vector<BigInt>& degrees = {}) const;

  /// Integral over X of a product of base Segre classes times h^extra_h, as a
  /// polynomial in d (the Bezout factor included).
  MultidegreePoly base_segre_integral(const std::vector<int>& indices, int extra_h = 0) const;

 private:
  ChowClass chow_of_level0(const JetClass::Key& key) const;

  ModelParams params_;
  std::vector<ChowClass> base_segre_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const JetClass>> segre_cache_;
};

/// Smallest r >= 1 such that the Morse certificate is positive at (r', ..., r')
/// for every r' in [r, d_max]; std::nullopt when it fails at d_max.
std::optional<int> kappa_degree_search(const ModelParams& params, int a, int d_max);

/// Same scan on an already computed certificate polynomial.
std::optional<int> uniform_positivity_frontier(const MultidegreePoly& p, int d_max);

}  // namespace jetci
