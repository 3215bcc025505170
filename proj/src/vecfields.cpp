#include "jetci/vecfields.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace jetci {

// ---- SymPoly ---------------------------------------------------------------

namespace {

SymPoly::Monomial multiply_monomials(const SymPoly::Monomial& a, const SymPoly::Monomial& b) {
  SymPoly::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

Rational rational_power(const Rational& base, int e) {
  Rational out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

}  // namespace

SymPoly SymPoly::constant(const Rational& value) {
  SymPoly p;
  p.add_term({}, value);
  return p;
}

SymPoly SymPoly::variable(int id) {
  SymPoly p;
  p.add_term({{id, 1}}, 1);
  return p;
}

SymPoly SymPoly::monomial(Monomial mono, const Rational& coeff) {
  std::sort(mono.begin(), mono.end());
  Monomial merged;
  for (const auto& [v, e] : mono) {
    if (e < 0) throw std::invalid_argument("SymPoly: negative exponent");
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  SymPoly p;
  p.add_term(std::move(merged), coeff);
  return p;
}

void SymPoly::add_term(Monomial mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SymPoly operator*(const SymPoly& lhs, const SymPoly& rhs) {
  SymPoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  return out;
}

SymPoly SymPoly::operator-() const {
  SymPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SymPoly SymPoly::derivative(int id) const {
  SymPoly out;
  for (const auto& [m, c] : terms_) {
    auto it = std::find_if(m.begin(), m.end(), [id](const auto& ve) { return ve.first == id; });
    if (it == m.end()) continue;
    Monomial reduced = m;
    auto& slot = reduced[static_cast<std::size_t>(it - m.begin())];
    const int e = slot.second;
    if (e == 1) {
      reduced.erase(reduced.begin() + (it - m.begin()));
    } else {
      --slot.second;
    }
    out.add_term(std::move(reduced), c * e);
  }
  return out;
}

Rational SymPoly::eval(const std::vector<Rational>& values) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) term *= rational_power(values.at(static_cast<std::size_t>(v)), e);
    sum += term;
  }
  return sum;
}

int SymPoly::degree_in(const std::function<bool(int)>& selected) const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : m) {
      if (selected(v)) d += e;
    }
    best = std::max(best, d);
  }
  return best;
}

std::string SymPoly::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || m.empty()) out << magnitude.get_str();
    bool need_star = !unit || m.empty();
    for (const auto& [v, e] : m) {
      if (need_star) out << "*";
      out << name(v);
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

// ---- chart -------------------------------------------------------------------

namespace {

// All alpha in N^n with |alpha| <= d: ascending total degree, lex-descending within a degree.
std::vector<Exponents> exponents_up_to(int n, int d) {
  std::vector<Exponents> out;
  for (int total = 0; total <= d; ++total) {
    Exponents alpha(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
      if (pos == n - 1) {
        alpha[static_cast<std::size_t>(pos)] = left;
        out.push_back(alpha);
        return;
      }
      for (int e = left; e >= 0; --e) {
        alpha[static_cast<std::size_t>(pos)] = e;
        fill(pos + 1, left - e);
      }
    };
    fill(0, total);
  }
  return out;
}

int weight(const Exponents& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

Exponents unit_vector(int N, int j) {
  Exponents e(static_cast<std::size_t>(N), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  return e;
}

}  // namespace

UniversalChart::UniversalChart(int N, std::vector<int> degrees) : N_(N), degrees_(std::move(degrees)) {
  if (N < 1) throw std::invalid_argument("UniversalChart: N must be >= 1");
  if (degrees_.empty()) throw std::invalid_argument("UniversalChart: need at least one degree");
  for (int d : degrees_) {
    if (d < 1) throw std::invalid_argument("UniversalChart: degrees must be >= 1");
  }
  for (int j = 1; j <= N; ++j) vars_.push_back({VarKind::z, j, {}});
  for (int k = 1; k <= N; ++k) vars_.push_back({VarKind::z_prime, k, {}});
  for (int i = 1; i <= c(); ++i) {
    exponents_.push_back(exponents_up_to(N, degrees_[static_cast<std::size_t>(i - 1)]));
    coeff_ids_.emplace_back();
    for (const auto& alpha : exponents_.back()) {
      coeff_ids_.back()[alpha] = static_cast<int>(vars_.size());
      vars_.push_back({VarKind::coeff, i, alpha});
    }
  }
}

int UniversalChart::z(int j) const {
  if (j < 1 || j > N_) throw std::out_of_range("z index out of range");
  return j - 1;
}

int UniversalChart::z_prime(int k) const {
  if (k < 1 || k > N_) throw std::out_of_range("z' index out of range");
  return N_ + k - 1;
}

std::optional<int> UniversalChart::find_coeff(int i, const Exponents& alpha) const {
  if (i < 1 || i > c()) return std::nullopt;
  const auto& ids = coeff_ids_[static_cast<std::size_t>(i - 1)];
  auto it = ids.find(alpha);
  if (it == ids.end()) return std::nullopt;
  return it->second;
}

int UniversalChart::coeff(int i, const Exponents& alpha) const {
  auto id = find_coeff(i, alpha);
  if (!id) throw std::out_of_range("no coefficient a^" + std::to_string(i) + " with this exponent in the chart");
  return *id;
}

const std::vector<Exponents>& UniversalChart::exponents(int i) const {
  if (i < 1 || i > c()) throw std::out_of_range("equation index out of range");
  return exponents_[static_cast<std::size_t>(i - 1)];
}

std::string UniversalChart::var_name(int id) const {
  const auto& v = variable(id);
  switch (v.kind) {
    case VarKind::z: return "z" + std::to_string(v.index);
    case VarKind::z_prime: return "zp" + std::to_string(v.index);
    case VarKind::coeff: {
      std::string s = "a" + std::to_string(v.index) + "[";
      for (std::size_t k = 0; k < v.alpha.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v.alpha[k]);
      }
      return s + "]";
    }
  }
  return "?";
}

std::function<std::string(int)> UniversalChart::namer() const {
  return [this](int id) { return var_name(id); };
}

namespace {

SymPoly z_power(const UniversalChart& chart, const Exponents& alpha) {
  SymPoly::Monomial m;
  for (int j = 1; j <= chart.N(); ++j) {
    const int e = alpha[static_cast<std::size_t>(j - 1)];
    if (e > 0) m.emplace_back(chart.z(j), e);
  }
  return SymPoly::monomial(std::move(m), 1);
}

// sum_k d(z^alpha)/dz_k z'_k
SymPoly z_power_differential(const UniversalChart& chart, const Exponents& alpha) {
  SymPoly out;
  const SymPoly base = z_power(chart, alpha);
  for (int k = 1; k <= chart.N(); ++k) {
    out += base.derivative(chart.z(k)) * SymPoly::variable(chart.z_prime(k));
  }
  return out;
}

}  // namespace

DefiningEquations defining_equations(const UniversalChart& chart) {
  DefiningEquations eqs;
  for (int i = 1; i <= chart.c(); ++i) {
    SymPoly f, fp;
    for (const auto& alpha : chart.exponents(i)) {
      const SymPoly a = SymPoly::variable(chart.coeff(i, alpha));
      f += a * z_power(chart, alpha);
      fp += a * z_power_differential(chart, alpha);
    }
    eqs.f.push_back(std::move(f));
    eqs.f_prime.push_back(std::move(fp));
  }
  return eqs;
}

// ---- vector fields -----------------------------------------------------------

const SymPoly& VectorField::coefficient(int id) const {
  static const SymPoly zero;
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? zero : it->second;
}

void VectorField::set(int id, SymPoly value) {
  if (value.is_zero()) {
    coeffs_.erase(id);
  } else {
    coeffs_[id] = std::move(value);
  }
  refresh();
}

void VectorField::add(int id, const SymPoly& value) {
  SymPoly sum = coefficient(id) + value;
  set(id, std::move(sum));
}

void VectorField::refresh() {
  pole_ = {};
  if (!chart_) return;
  const UniversalChart* chart = chart_;
  auto is_z = [chart](int v) { return chart->variable(v).kind == VarKind::z; };
  auto is_a = [chart](int v) { return chart->variable(v).kind == VarKind::coeff; };
  for (const auto& [id, poly] : coeffs_) {
    pole_.z_degree = std::max(pole_.z_degree, poly.degree_in(is_z));
    pole_.a_degree = std::max(pole_.a_degree, poly.degree_in(is_a));
  }
}

SymPoly apply(const VectorField& field, const SymPoly& g) {
  SymPoly out;
  for (const auto& [id, coeff] : field.coefficients()) {
    SymPoly dg = g.derivative(id);
    if (!dg.is_zero()) out += coeff * dg;
  }
  return out;
}

VectorField build_low_coeff_field(const UniversalChart& chart, int i, const std::map<Exponents, Rational>& free_data) {
  if (i < 1 || i > chart.c()) throw std::invalid_argument("build_low_coeff_field: equation index out of range");
  const int N = chart.N();
  const int d = chart.degrees()[static_cast<std::size_t>(i - 1)];
  const Exponents origin(static_cast<std::size_t>(N), 0);
  const Exponents e1 = unit_vector(N, 1);

  VectorField field;
  field.attach(chart);
  SymPoly R0, R1;
  for (const auto& [alpha, value] : free_data) {
    if (static_cast<int>(alpha.size()) != N) {
      throw std::invalid_argument("build_low_coeff_field: exponent of wrong length");
    }
    if (std::any_of(alpha.begin(), alpha.end(), [](int e) { return e < 0; })) {
      throw std::invalid_argument("build_low_coeff_field: negative exponent");
    }
    const int w = weight(alpha);
    if (w > N) {
      throw std::invalid_argument("build_low_coeff_field: |alpha| = " + std::to_string(w) +
                                  " exceeds N = " + std::to_string(N));
    }
    if (w > d) {
      throw std::invalid_argument("build_low_coeff_field: |alpha| = " + std::to_string(w) + " exceeds d_" +
                                  std::to_string(i) + " = " + std::to_string(d));
    }
    if (alpha == origin || alpha == e1) {
      throw std::invalid_argument("build_low_coeff_field: the 0 and e_1 coefficients are solved, not free");
    }
    if (value == 0) continue;
    R0 += z_power(chart, alpha) * value;
    R1 += z_power_differential(chart, alpha) * value;
    field.set(chart.coeff(i, alpha), SymPoly::variable(chart.z_prime(1)) * value);
  }
  field.set(chart.coeff(i, e1), -R1);
  field.set(chart.coeff(i, origin),
            SymPoly::variable(chart.z(1)) * R1 - SymPoly::variable(chart.z_prime(1)) * R0);
  return field;
}

VectorField build_Tj(const UniversalChart& chart, int j) {
  if (j < 1 || j > chart.N()) throw std::invalid_argument("build_Tj: j must lie in 1..N");
  VectorField field;
  field.attach(chart);
  field.set(chart.z(j), SymPoly::constant(1));
  const Exponents ej = unit_vector(chart.N(), j);
  for (int i = 1; i <= chart.c(); ++i) {
    const int d = chart.degrees()[static_cast<std::size_t>(i - 1)];
    for (const auto& alpha : chart.exponents(i)) {
      if (weight(alpha) > d - 1) continue;
      Exponents shifted = alpha;
      ++shifted[static_cast<std::size_t>(j - 1)];
      const int factor = alpha[static_cast<std::size_t>(j - 1)] + 1;
      field.add(chart.coeff(i, alpha), SymPoly::variable(chart.coeff(i, shifted)) * Rational(-factor));
    }
  }
  return field;
}

VectorField build_T_alpha_ell(const UniversalChart& chart, int i, const Exponents& alpha, const Exponents& ell,
                              ShiftConvention convention) {
  const int N = chart.N();
  if (static_cast<int>(alpha.size()) != N || static_cast<int>(ell.size()) != N) {
    throw std::invalid_argument("build_T_alpha_ell: alpha and ell need N entries");
  }
  if (!chart.find_coeff(i, alpha)) throw std::invalid_argument("build_T_alpha_ell: alpha is not a chart coefficient");
  if (std::any_of(ell.begin(), ell.end(), [](int e) { return e < 0; }) || weight(ell) > N) {
    throw std::invalid_argument("build_T_alpha_ell: need ell in N^N with |ell| <= N");
  }
  VectorField field;
  field.attach(chart);
  Exponents part(static_cast<std::size_t>(N), 0);  // ell'
  while (true) {
    Exponents rest(static_cast<std::size_t>(N));  // ell''
    BigInt multinomial = 1;
    for (int k = 0; k < N; ++k) {
      rest[static_cast<std::size_t>(k)] = ell[static_cast<std::size_t>(k)] - part[static_cast<std::size_t>(k)];
      multinomial *= binomial(ell[static_cast<std::size_t>(k)], part[static_cast<std::size_t>(k)]);
    }
    const Exponents& drop = convention == ShiftConvention::displayed ? ell : part;
    Exponents target(static_cast<std::size_t>(N));
    bool valid = true;
    for (int k = 0; k < N; ++k) {
      target[static_cast<std::size_t>(k)] = alpha[static_cast<std::size_t>(k)] - drop[static_cast<std::size_t>(k)];
      valid = valid && target[static_cast<std::size_t>(k)] >= 0;
    }
    if (valid) field.add(chart.coeff(i, target), z_power(chart, rest) * Rational(multinomial));

    int pos = 0;
    while (pos < N && part[static_cast<std::size_t>(pos)] == ell[static_cast<std::size_t>(pos)]) {
      part[static_cast<std::size_t>(pos++)] = 0;
    }
    if (pos == N) break;
    ++part[static_cast<std::size_t>(pos)];
  }
  return field;
}

namespace {

bool invertible(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return true;
}

}  // namespace

VectorField build_T_Lambda(const UniversalChart& chart, const std::vector<std::vector<Rational>>& lambda,
                           const std::map<int, SymPoly>& a_solution) {
  const int N = chart.N();
  if (static_cast<int>(lambda.size()) != N ||
      std::any_of(lambda.begin(), lambda.end(), [N](const auto& row) { return static_cast<int>(row.size()) != N; })) {
    throw std::invalid_argument("build_T_Lambda: Lambda must be N x N");
  }
  if (!invertible(lambda)) throw std::invalid_argument("build_T_Lambda: Lambda is singular");
  VectorField field;
  field.attach(chart);
  for (int k = 1; k <= N; ++k) {
    SymPoly coeff;
    for (int l = 1; l <= N; ++l) {
      coeff += SymPoly::variable(chart.z_prime(l)) * lambda[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(k - 1)];
    }
    field.set(chart.z_prime(k), std::move(coeff));
  }
  for (const auto& [id, poly] : a_solution) {
    if (id < 0 || id >= chart.num_vars() || chart.variable(id).kind != VarKind::coeff) {
      throw std::invalid_argument("build_T_Lambda: A-solution keys must be coefficient variables");
    }
    field.add(id, poly);
  }
  return field;
}

bool identically_tangent(const UniversalChart& chart, const VectorField& field) {
  const DefiningEquations eqs = defining_equations(chart);
  for (int i = 0; i < chart.c(); ++i) {
    if (!apply(field, eqs.f[static_cast<std::size_t>(i)]).is_zero()) return false;
    if (!apply(field, eqs.f_prime[static_cast<std::size_t>(i)]).is_zero()) return false;
  }
  return true;
}

TangencyReport point_tangency_check(const UniversalChart& chart, const VectorField& field, int samples,
                                    std::uint64_t seed) {
  if (samples < 0) throw std::invalid_argument("point_tangency_check: samples must be >= 0");
  constexpr int kMaxRetries = 100;
  const int N = chart.N();
  const DefiningEquations eqs = defining_equations(chart);
  std::vector<SymPoly> tf, tfp;
  for (int i = 0; i < chart.c(); ++i) {
    tf.push_back(apply(field, eqs.f[static_cast<std::size_t>(i)]));
    tfp.push_back(apply(field, eqs.f_prime[static_cast<std::size_t>(i)]));
  }

  TangencyReport report;
  report.seed = seed;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-5, 5);
  const Exponents origin(static_cast<std::size_t>(N), 0);
  const Exponents e1 = unit_vector(N, 1);

  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> point;
    int tries = 0;
    while (true) {
      if (tries++ > kMaxRetries) {
        throw std::runtime_error("point_tangency_check: could not draw a nondegenerate sample");
      }
      point.assign(static_cast<std::size_t>(chart.num_vars()), 0);
      for (auto& v : point) v = draw(rng);
      // The linear system for (a_0, a_{e1}) is triangular with pivots 1 and z'_1.
      bool degenerate = point[static_cast<std::size_t>(chart.z_prime(1))] == 0;
      for (int i = 1; i <= chart.c() && !degenerate; ++i) {
        const int a0 = chart.coeff(i, origin);
        const int a1 = chart.coeff(i, e1);
        point[static_cast<std::size_t>(a0)] = 0;
        point[static_cast<std::size_t>(a1)] = 0;
        const Rational rest_fp = eqs.f_prime[static_cast<std::size_t>(i - 1)].eval(point);
        const Rational v1 = -rest_fp / point[static_cast<std::size_t>(chart.z_prime(1))];
        point[static_cast<std::size_t>(a1)] = v1;
        const Rational rest_f = eqs.f[static_cast<std::size_t>(i - 1)].eval(point);
        point[static_cast<std::size_t>(a0)] = -rest_f;
        // Stay in the chart where a^i_{(0,d_i,0,...)} is nonzero.
        if (N >= 2) {
          Exponents chart_alpha(static_cast<std::size_t>(N), 0);
          chart_alpha[1] = chart.degrees()[static_cast<std::size_t>(i - 1)];
          if (point[static_cast<std::size_t>(chart.coeff(i, chart_alpha))] == 0) degenerate = true;
        }
      }
      if (!degenerate) break;
      ++report.resamples;
    }
    for (int i = 0; i < chart.c(); ++i) {
      const std::string suffix = std::to_string(i + 1);
      const Rational r = tf[static_cast<std::size_t>(i)].eval(point);
      const Rational rp = tfp[static_cast<std::size_t>(i)].eval(point);
      report.checks += 2;
      if (r != 0) report.nonzero.push_back({s, "f" + suffix, r});
      if (rp != 0) report.nonzero.push_back({s, "f'" + suffix, rp});
    }
  }
  return report;
}

}  // namespace jetci
