#include "jetci/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jetci {

namespace {

int degree_of(const Exponents& exps) { return std::accumulate(exps.begin(), exps.end(), 0); }

std::string monomial_string(const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'd' + std::to_string(i + 1);
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const int dl = degree_of(lhs);
  const int dr = degree_of(rhs);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

MultidegreePoly::MultidegreePoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("MultidegreePoly: num_vars must be positive");
}

MultidegreePoly MultidegreePoly::constant(int num_vars, const BigInt& value) {
  MultidegreePoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), value);
  return p;
}

MultidegreePoly MultidegreePoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::invalid_argument("MultidegreePoly::variable: index out of range");
  Exponents exps(num_vars, 0);
  exps[index] = 1;
  return monomial(std::move(exps), 1);
}

MultidegreePoly MultidegreePoly::monomial(Exponents exps, const BigInt& coeff) {
  MultidegreePoly p(static_cast<int>(exps.size()));
  p.add_term(exps, coeff);
  return p;
}

BigInt MultidegreePoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultidegreePoly::constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

void MultidegreePoly::add_term(const Exponents& exps, const BigInt& coeff) {
  if (static_cast<int>(exps.size()) != num_vars_) {
    throw std::invalid_argument("MultidegreePoly: exponent vector length does not match num_vars");
  }
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
    throw std::invalid_argument("MultidegreePoly: negative exponent");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultidegreePoly::require_same_ring(const MultidegreePoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("MultidegreePoly: mismatched num_vars (" + std::to_string(num_vars_) + " vs " +
                                std::to_string(other.num_vars_) + ")");
  }
}

MultidegreePoly& MultidegreePoly::operator+=(const MultidegreePoly& other) {
  require_same_ring(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

MultidegreePoly& MultidegreePoly::operator-=(const MultidegreePoly& other) {
  require_same_ring(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

MultidegreePoly operator*(const MultidegreePoly& lhs, const MultidegreePoly& rhs) {
  lhs.require_same_ring(rhs);
  MultidegreePoly out(lhs.num_vars_);
  Exponents exps(lhs.num_vars_);
  BigInt prod;
  for (const auto& [le, lc] : lhs.terms_) {
    for (const auto& [re, rc] : rhs.terms_) {
      for (int i = 0; i < lhs.num_vars_; ++i) exps[i] = le[i] + re[i];
      prod = lc * rc;
      out.add_term(exps, prod);
    }
  }
  return out;
}

MultidegreePoly& MultidegreePoly::operator*=(const MultidegreePoly& other) { return *this = *this * other; }

MultidegreePoly& MultidegreePoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= scalar;
  return *this;
}

MultidegreePoly MultidegreePoly::operator-() const {
  MultidegreePoly out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

MultidegreePoly MultidegreePoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("MultidegreePoly::pow: negative exponent");
  MultidegreePoly result = constant(num_vars_, 1);
  MultidegreePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Degree MultidegreePoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // graded order puts a top-degree term first
  return degree_of(terms_.begin()->first);
}

MultidegreePoly MultidegreePoly::dominant_part() const {
  MultidegreePoly out(num_vars_);
  const Degree top = total_degree();
  if (!top) return out;
  for (const auto& [exps, coeff] : terms_) {
    if (degree_of(exps) != *top) break;
    out.terms_.emplace(exps, coeff);
  }
  return out;
}

bool MultidegreePoly::is_multilinear() const {
  for (const auto& [exps, coeff] : terms_) {
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e > 1; })) return false;
  }
  return true;
}

BigInt MultidegreePoly::eval(std::span<const BigInt> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw std::invalid_argument("MultidegreePoly::eval: point has length " + std::to_string(point.size()) +
                                ", expected " + std::to_string(num_vars_));
  }
  BigInt total = 0;
  BigInt term;
  BigInt power;
  for (const auto& [exps, coeff] : terms_) {
    term = coeff;
    for (int i = 0; i < num_vars_; ++i) {
      if (exps[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(exps[i]));
      term *= power;
    }
    total += term;
  }
  return total;
}

BigInt MultidegreePoly::eval(std::span<const long> point) const {
  std::vector<BigInt> big(point.begin(), point.end());
  return eval(std::span<const BigInt>(big));
}

BigInt MultidegreePoly::eval_uniform(const BigInt& r) const {
  return eval(std::vector<BigInt>(static_cast<std::size_t>(num_vars_), r));
}

Rational MultidegreePoly::eval_uniform(const Rational& r) const {
  Rational total = 0;
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (int e : exps) {
      for (int k = 0; k < e; ++k) term *= r;
    }
    total += term;
  }
  return total;
}

std::string MultidegreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    const bool negative = coeff < 0;
    const BigInt magnitude = abs(coeff);
    const std::string mono = monomial_string(exps);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << mono;
    }
  }
  return out.str();
}

MultidegreePoly elementary_symmetric(int i, int c) {
  if (i < 0) throw std::invalid_argument("elementary_symmetric: negative index " + std::to_string(i));
  if (c < 1) throw std::invalid_argument("elementary_symmetric: c must be positive");
  MultidegreePoly out(c);
  if (i > c) return out;
  // walk all 0/1 vectors with exactly i ones
  Exponents exps(c, 0);
  std::fill(exps.end() - i, exps.end(), 1);
  do {
    out.add_term(exps, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

std::vector<std::pair<int, BigInt>> express_in_elementary(const MultidegreePoly& p) {
  const int c = p.num_vars();
  std::vector<std::optional<BigInt>> by_degree(c + 1);
  for (const auto& [exps, coeff] : p.terms()) {
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e > 1; })) {
      throw std::domain_error("express_in_elementary: monomial " + MultidegreePoly::monomial(exps, 1).to_string() +
                              " is not multilinear");
    }
    const int j = degree_of(exps);
    if (!by_degree[j]) {
      by_degree[j] = coeff;
    } else if (*by_degree[j] != coeff) {
      throw std::domain_error("express_in_elementary: monomial " + MultidegreePoly::monomial(exps, 1).to_string() +
                              " breaks symmetry (coefficient " + coeff.get_str() + " vs " + by_degree[j]->get_str() +
                              ")");
    }
  }
  std::vector<std::pair<int, BigInt>> out;
  for (int j = c; j >= 0; --j) {
    if (!by_degree[j]) continue;
    // every degree-j squarefree monomial must be present
    const MultidegreePoly ej = elementary_symmetric(j, c);
    for (const auto& [exps, one] : ej.terms()) {
      if (p.coefficient(exps) != *by_degree[j]) {
        throw std::domain_error("express_in_elementary: monomial " + MultidegreePoly::monomial(exps, 1).to_string() +
                                " is missing, polynomial is not symmetric");
      }
    }
    out.emplace_back(j, *by_degree[j]);
  }
  return out;
}

MultidegreePoly combine_elementary(const std::vector<std::pair<int, BigInt>>& coeffs, int c) {
  MultidegreePoly out(c);
  for (const auto& [j, coeff] : coeffs) out += elementary_symmetric(j, c) * coeff;
  return out;
}

std::vector<MultidegreePoly> series_inverse(const std::vector<MultidegreePoly>& c_seq, int order) {
  if (c_seq.empty()) throw std::invalid_argument("series_inverse: empty class sequence");
  if (order < 0) throw std::invalid_argument("series_inverse: negative order");
  const int vars = c_seq.front().num_vars();
  auto c_at = [&](int i) { return i < static_cast<int>(c_seq.size()) ? c_seq[i] : MultidegreePoly(vars); };

  // With sigma_i = (-1)^i s_i the relation reads sum_{i<=k} c_{k-i} sigma_i = 0.
  std::vector<MultidegreePoly> sigma;
  sigma.reserve(order + 1);
  sigma.push_back(MultidegreePoly::constant(vars, 1));
  for (int k = 1; k <= order; ++k) {
    MultidegreePoly acc(vars);
    for (int i = 0; i < k; ++i) acc -= c_at(k - i) * sigma[i];
    sigma.push_back(std::move(acc));
  }
  for (int k = 1; k <= order; k += 2) sigma[k] = -sigma[k];
  return sigma;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

}  // namespace jetci
