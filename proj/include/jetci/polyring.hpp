#pragma once

// Exact sparse polynomials in the multidegree variables d1, ..., dc.
//
// Every intersection number computed by this library is an element of
// Z[d1, ..., dc]. Coefficients are GMP integers; terms live in a map ordered
// graded-lexicographically (highest total degree first, then larger d1
// exponent first, ...), so iteration order and rendering are deterministic.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jetci {

using BigInt = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<int>;

/// Total degree; std::nullopt stands for the degree of the zero polynomial
/// (minus infinity). std::optional orders nullopt below every integer, which
/// is exactly the comparison semantics wanted.
using Degree = std::optional<int>;

struct GradedLexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

class MultidegreePoly {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLexGreater>;

  explicit MultidegreePoly(int num_vars);

  static MultidegreePoly constant(int num_vars, const BigInt& value);
  /// The variable d_{index+1}.
  static MultidegreePoly variable(int num_vars, int index);
  static MultidegreePoly monomial(Exponents exps, const BigInt& coeff);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponents& exps) const;
  /// Coefficient of the constant monomial.
  BigInt constant_term() const;

  /// Adds coeff * d^exps, keeping the canonical form (no zero coefficients).
  void add_term(const Exponents& exps, const BigInt& coeff);

  MultidegreePoly& operator+=(const MultidegreePoly& other);
  MultidegreePoly& operator-=(const MultidegreePoly& other);
  MultidegreePoly& operator*=(const MultidegreePoly& other);
  MultidegreePoly& operator*=(const BigInt& scalar);

  friend MultidegreePoly operator+(MultidegreePoly lhs, const MultidegreePoly& rhs) { return lhs += rhs; }
  friend MultidegreePoly operator-(MultidegreePoly lhs, const MultidegreePoly& rhs) { return lhs -= rhs; }
  friend MultidegreePoly operator*(const MultidegreePoly& lhs, const MultidegreePoly& rhs);
  friend MultidegreePoly operator*(MultidegreePoly lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend MultidegreePoly operator*(const BigInt& lhs, MultidegreePoly rhs) { return rhs *= lhs; }
  MultidegreePoly operator-() const;

  friend bool operator==(const MultidegreePoly& lhs, const MultidegreePoly& rhs) {
    return lhs.num_vars_ == rhs.num_vars_ && lhs.terms_ == rhs.terms_;
  }

  MultidegreePoly pow(int exponent) const;

  Degree total_degree() const;
  /// Sum of the terms of top total degree; zero for the zero polynomial.
  MultidegreePoly dominant_part() const;

  /// True when every exponent is 0 or 1.
  bool is_multilinear() const;

  BigInt eval(std::span<const BigInt> point) const;
  BigInt eval(std::span<const long> point) const;
  /// Evaluation at (r, ..., r).
  BigInt eval_uniform(const BigInt& r) const;
  Rational eval_uniform(const Rational& r) const;

  /// Canonical text rendering, e.g. "d1^2*d2 - 5*d1 + 3"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_ring(const MultidegreePoly& other) const;

  int num_vars_;
  TermMap terms_;
};

/// The elementary symmetric polynomial e_i(d1, ..., dc); zero when i > c.
MultidegreePoly elementary_symmetric(int i, int c);

/// Writes a multilinear symmetric polynomial as sum_j coeff_j * e_j.
/// Pairs are listed by descending j and zero coefficients are omitted.
/// Throws std::domain_error naming the first offending monomial otherwise.
std::vector<std::pair<int, BigInt>> express_in_elementary(const MultidegreePoly& p);

/// Rebuilds sum_j coeff_j * e_j in c variables.
MultidegreePoly combine_elementary(const std::vector<std::pair<int, BigInt>>& coeffs, int c);

/// Inverts the Chern/Segre relation (1 + c1 t + c2 t^2 + ...)(1 - s1 t + s2 t^2 - ...) = 1.
/// Input and output share the same layout: index 0 holds the unit (the input's
/// entry 0 is ignored and treated as 1), indices 1..order hold the classes.
/// Missing input entries are zero. The map is an involution.
std::vector<MultidegreePoly> series_inverse(const std::vector<MultidegreePoly>& c_seq, int order);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!; zero for k < 0.
BigInt binomial(long n, long k);

}  // namespace jetci
