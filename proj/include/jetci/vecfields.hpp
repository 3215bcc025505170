#pragma once

// Vector fields on the affine chart (z, z', a^i_alpha) of the relative tangent
// space of the universal complete intersection, and tangency checks against
// f_i = sum a^i_alpha z^alpha and f'_i = sum a^i_alpha d(z^alpha)(z').

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetci/polyring.hpp"

namespace jetci {

/// Sparse polynomial over Q in chart variables, monomials stored as sorted
/// (variable id, exponent) lists.
class SymPoly {
 public:
  using Monomial = std::vector<std::pair<int, int>>;

  SymPoly() = default;
  static SymPoly constant(const Rational& value);
  static SymPoly variable(int id);
  static SymPoly monomial(Monomial mono, const Rational& coeff);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Monomial mono, const Rational& coeff);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rational& scalar);
  friend SymPoly operator+(SymPoly lhs, const SymPoly& rhs) { return lhs += rhs; }
  friend SymPoly operator-(SymPoly lhs, const SymPoly& rhs) { return lhs -= rhs; }
  friend SymPoly operator*(SymPoly lhs, const Rational& s) { return lhs *= s; }
  friend SymPoly operator*(const SymPoly& lhs, const SymPoly& rhs);
  SymPoly operator-() const;
  bool operator==(const SymPoly& other) const = default;

  SymPoly derivative(int id) const;
  /// values[id] for every variable that occurs.
  Rational eval(const std::vector<Rational>& values) const;
  /// Largest total degree counting only variables selected by the predicate (0 for the zero polynomial).
  int degree_in(const std::function<bool(int)>& selected) const;

  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  std::map<Monomial, Rational> terms_;
};

enum class VarKind { z, z_prime, coeff };

struct ChartVariable {
  VarKind kind;
  int index = 0;       // j for z_j / z'_j (1-based), i for a^i_alpha (1-based)
  Exponents alpha;     // coefficient variables only
};

class UniversalChart {
 public:
  /// degrees d_1..d_c, each >= 1, c >= 1, N >= 1.
  UniversalChart(int N, std::vector<int> degrees);

  int N() const { return N_; }
  int c() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }

  int z(int j) const;
  int z_prime(int k) const;
  /// Throws std::out_of_range unless |alpha| <= d_i and alpha has N entries.
  int coeff(int i, const Exponents& alpha) const;
  std::optional<int> find_coeff(int i, const Exponents& alpha) const;
  /// Exponents with |alpha| <= d_i in the chart's fixed order.
  const std::vector<Exponents>& exponents(int i) const;

  const ChartVariable& variable(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
  std::string var_name(int id) const;
  std::function<std::string(int)> namer() const;

 private:
  int N_;
  std::vector<int> degrees_;
  std::vector<ChartVariable> vars_;
  std::vector<std::vector<Exponents>> exponents_;
  std::vector<std::map<Exponents, int>> coeff_ids_;
};

struct DefiningEquations {
  std::vector<SymPoly> f;
  std::vector<SymPoly> f_prime;
};

DefiningEquations defining_equations(const UniversalChart& chart);

struct PoleOrders {
  int z_degree = 0;
  int a_degree = 0;
};

/// Field sum_v T_v d/dv; pole orders are recomputed on every update.
class VectorField {
 public:
  VectorField() = default;

  const std::map<int, SymPoly>& coefficients() const { return coeffs_; }
  const SymPoly& coefficient(int id) const;
  void set(int id, SymPoly value);
  void add(int id, const SymPoly& value);
  const PoleOrders& pole_orders() const { return pole_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Requires the chart to derive variable kinds for the pole-order audit.
  void attach(const UniversalChart& chart) { chart_ = &chart; refresh(); }

 private:
  void refresh();

  std::map<int, SymPoly> coeffs_;
  PoleOrders pole_;
  const UniversalChart* chart_ = nullptr;
};

SymPoly apply(const VectorField& field, const SymPoly& g);

/// Field sum A^i_alpha d/da^i_alpha with free A^i_alpha (|alpha| <= min(N, d_i),
/// alpha not 0 or e_1) taken from free_data and the two remaining ones solved
/// so that T(f_i) = T(f'_i) = 0. The result is multiplied by z'_1 to clear the
/// denominator: A_{e1} = -R_1, A_0 = z_1 R_1 - z'_1 R_0.
VectorField build_low_coeff_field(const UniversalChart& chart, int i, const std::map<Exponents, Rational>& free_data);

/// d/dz_j - sum_i sum_{|alpha| <= d_i - 1} (alpha_j + 1) a^i_{alpha + e_j} d/da^i_alpha.
VectorField build_Tj(const UniversalChart& chart, int j);

enum class ShiftConvention {
  displayed,  // every term differentiates along a_{alpha - ell}
  split,      // the term indexed by ell' differentiates along a_{alpha - ell'}
};

/// sum_{ell' + ell'' = ell} ell!/(ell'! ell''!) z^{ell''} d/da^i_{...}; terms whose
/// target index leaves N^N are dropped. |ell| <= N required.
VectorField build_T_alpha_ell(const UniversalChart& chart, int i, const Exponents& alpha, const Exponents& ell,
                              ShiftConvention convention = ShiftConvention::displayed);

/// sum_k (sum_l Lambda[l][k] z'_l) d/dz'_k plus the supplied a-directions
/// (coefficient id -> polynomial). Lambda must be N x N and invertible over Q.
VectorField build_T_Lambda(const UniversalChart& chart, const std::vector<std::vector<Rational>>& lambda,
                           const std::map<int, SymPoly>& a_solution = {});

/// True when T(f_i) and T(f'_i) are the zero polynomial for every i.
bool identically_tangent(const UniversalChart& chart, const VectorField& field);

struct Residual {
  int sample = 0;
  std::string equation;  // "f1", "f'2", ...
  Rational value;
};

struct TangencyReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int checks = 0;
  int resamples = 0;
  std::vector<Residual> nonzero;
  bool all_zero() const { return nonzero.empty(); }
};

/// Samples exact rational points with f_i = f'_i = 0 by drawing z, z' and the
/// other coefficients at random and solving for a^i_0, a^i_{e1}; evaluates
/// T(f_i), T(f'_i) there.
TangencyReport point_tangency_check(const UniversalChart& chart, const VectorField& field, int samples,
                                    std::uint64_t seed);

}  // namespace jetci
