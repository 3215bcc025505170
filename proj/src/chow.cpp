#include "jetci/chow.hpp"

#include <stdexcept>
#include <string>

namespace jetci {

ModelParams::ModelParams(int N, int n) : N_(N), n_(n), c_(N - n) {
  if (n < 1) throw std::invalid_argument("ModelParams: dimension n must be >= 1 (got " + std::to_string(n) + ")");
  if (c_ < 1) {
    throw std::invalid_argument("ModelParams: codimension c = N - n must be >= 1 (N=" + std::to_string(N) +
                                ", n=" + std::to_string(n) + ")");
  }
  kappa_ = (n_ + c_ - 1) / c_;
  b_ = n_ - (kappa_ - 1) * c_;
}

ChowClass::ChowClass(const ModelParams& params)
    : params_(params), coeffs_(static_cast<std::size_t>(params.n() + 1), MultidegreePoly(params.c())) {}

ChowClass::ChowClass(const ModelParams& params, std::vector<MultidegreePoly> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(params.n() + 1), MultidegreePoly(params.c()));
  for (const auto& p : coeffs_) {
    if (p.num_vars() != params.c()) throw std::invalid_argument("ChowClass: coefficient ring does not match c");
  }
}

ChowClass ChowClass::one(const ModelParams& params) { return pure(params, 0, MultidegreePoly::constant(params.c(), 1)); }

ChowClass ChowClass::pure(const ModelParams& params, int j, const MultidegreePoly& coeff) {
  ChowClass out(params);
  if (j < 0) throw std::invalid_argument("ChowClass::pure: negative degree");
  if (j <= params.n()) out.coeffs_[static_cast<std::size_t>(j)] = coeff;
  return out;
}

ChowClass ChowClass::h_power(const ModelParams& params, int j) {
  return pure(params, j, MultidegreePoly::constant(params.c(), 1));
}

bool ChowClass::is_zero() const {
  for (const auto& p : coeffs_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool ChowClass::is_pure(int j) const {
  for (int k = 0; k <= params_.n(); ++k) {
    if (k != j && !coeffs_[static_cast<std::size_t>(k)].is_zero()) return false;
  }
  return true;
}

void ChowClass::require_same_params(const ChowClass& other) const {
  if (!(params_ == other.params_)) throw std::invalid_argument("ChowClass: model parameters differ");
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_same_params(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  require_same_params(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

ChowClass& ChowClass::operator*=(const BigInt& scalar) {
  for (auto& p : coeffs_) p *= scalar;
  return *this;
}

ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs) {
  lhs.require_same_params(rhs);
  const int n = lhs.params_.n();
  ChowClass out(lhs.params_);
  for (int p = 0; p <= n; ++p) {
    if (lhs.coeffs_[p].is_zero()) continue;
    for (int q = 0; p + q <= n; ++q) {
      if (rhs.coeffs_[q].is_zero()) continue;
      out.coeffs_[p + q] += lhs.coeffs_[p] * rhs.coeffs_[q];
    }
  }
  return out;
}

ChowClass ChowClass::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("ChowClass::pow: negative exponent");
  ChowClass result = one(params_);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

ChowClass chow_mul(const ChowClass& x, const ChowClass& y) { return x * y; }

MultidegreePoly integrate(const ChowClass& x) {
  const auto& params = x.params();
  return x.coeff(params.n()) * elementary_symmetric(params.c(), params.c());
}

std::vector<ChowClass> segre_cotangent(const ModelParams& params, int twist) {
  const int n = params.n();
  const int c = params.c();
  const BigInt m = twist;

  // (1 + (1-m)h)^{-1} = sum_k (-(1-m))^k h^k, raised to the N+1.
  ChowClass inverse_euler(params);
  BigInt ratio = -(1 - m);
  BigInt power = 1;
  std::vector<MultidegreePoly> geo;
  for (int k = 0; k <= n; ++k) {
    geo.push_back(MultidegreePoly::constant(c, power));
    power *= ratio;
  }
  inverse_euler = ChowClass(params, geo).pow(params.N() + 1);

  ChowClass total = inverse_euler;
  total = total * ChowClass(params, {MultidegreePoly::constant(c, 1), MultidegreePoly::constant(c, -m)});
  for (int i = 0; i < c; ++i) {
    MultidegreePoly shifted = MultidegreePoly::variable(c, i) - MultidegreePoly::constant(c, m);
    total = total * ChowClass(params, {MultidegreePoly::constant(c, 1), shifted});
  }

  std::vector<ChowClass> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) out.push_back(ChowClass::pure(params, j, total.coeff(j)));
  return out;
}

MultidegreePoly segre_closed_form(const ModelParams& params, int j) {
  if (j < 0 || j > params.n()) {
    throw std::invalid_argument("segre_closed_form: j=" + std::to_string(j) + " outside 0.." +
                                std::to_string(params.n()));
  }
  MultidegreePoly out(params.c());
  for (int k = 0; k <= j; ++k) {
    BigInt coeff = binomial(params.N() + k, params.N());
    if (k % 2 == 1) coeff = -coeff;
    out += elementary_symmetric(j - k, params.c()) * coeff;
  }
  return out;
}

std::vector<ChowClass> twist_segre(const std::vector<ChowClass>& s_seq, int rank, const ChowClass& l_class) {
  if (s_seq.empty()) throw std::invalid_argument("twist_segre: empty Segre sequence");
  const ModelParams& params = s_seq.front().params();
  if (!(l_class.params() == params)) throw std::invalid_argument("twist_segre: line class on a different model");
  if (!l_class.is_pure(1)) throw std::invalid_argument("twist_segre: line class must have pure h-degree 1");
  if (s_seq.front() != ChowClass::one(params)) throw std::invalid_argument("twist_segre: s_0 must be 1");

  std::vector<ChowClass> l_powers{ChowClass::one(params)};
  for (std::size_t i = 1; i < s_seq.size(); ++i) l_powers.push_back(l_powers.back() * l_class);

  std::vector<ChowClass> out;
  for (int i = 0; i < static_cast<int>(s_seq.size()); ++i) {
    ChowClass acc(params);
    for (int j = 0; j <= i; ++j) {
      acc += s_seq[j] * l_powers[i - j] * binomial(rank - 1 + i, i - j);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<ChowClass> chern_line_sum(const ModelParams& params, const std::vector<int>& shifts) {
  const int c = params.c();
  if (static_cast<int>(shifts.size()) != c) {
    throw std::invalid_argument("chern_line_sum: expected " + std::to_string(c) + " shifts, got " +
                                std::to_string(shifts.size()));
  }
  // prod_i (1 + (d_i + shift_i) h), truncated
  ChowClass total = ChowClass::one(params);
  for (int i = 0; i < c; ++i) {
    MultidegreePoly root = MultidegreePoly::variable(c, i) + MultidegreePoly::constant(c, shifts[i]);
    total = total * ChowClass(params, {MultidegreePoly::constant(c, 1), root});
  }
  std::vector<ChowClass> out;
  for (int l = 0; l <= params.n(); ++l) out.push_back(ChowClass::pure(params, l, total.coeff(l)));
  return out;
}

}  // namespace jetci
