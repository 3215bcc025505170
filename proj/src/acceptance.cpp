#include "jetci/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "jetci/bounds.hpp"
#include "jetci/chow.hpp"
#include "jetci/jet_tower.hpp"
#include "jetci/schur.hpp"
#include "jetci/vecfields.hpp"

namespace jetci {

namespace {

// Each check returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string(std::mt19937_64&, std::string&)>;

std::string params_tag(int N, int n) { return "N=" + std::to_string(N) + " n=" + std::to_string(n); }

std::string segre_forms(std::mt19937_64&, std::string& info) {
  int compared = 0;
  for (int N = 2; N <= 10; ++N) {
    for (int c = 1; c < N; ++c) {
      const ModelParams params(N, N - c);
      const auto product = segre_cotangent(params, 0);
      for (int j = 0; j <= params.n(); ++j) {
        ++compared;
        if (!(segre_closed_form(params, j) == product[static_cast<std::size_t>(j)].coeff(j))) {
          return "closed form differs at " + params_tag(N, params.n()) + " j=" + std::to_string(j);
        }
      }
    }
  }
  int twisted = 0;
  for (int N = 2; N <= 6; ++N) {
    for (int c = 1; c < N; ++c) {
      const ModelParams params(N, N - c);
      const auto base = segre_cotangent(params, 0);
      for (int m = -3; m <= 3; ++m) {
        ++twisted;
        const auto direct = segre_cotangent(params, m);
        const auto via_twist = twist_segre(base, params.n(), ChowClass::h_power(params, 1) * BigInt(m));
        if (direct != via_twist) return "twist mismatch at " + params_tag(N, params.n()) + " m=" + std::to_string(m);
      }
    }
  }
  info = std::to_string(compared) + " closed-form classes, " + std::to_string(twisted) + " twisted tables";
  return {};
}

std::string duality(std::mt19937_64& rng, std::string& info) {
  constexpr int kOrder = 8;
  std::uniform_int_distribution<int> value(-9, 9);
  std::uniform_int_distribution<int> rank(1, kOrder);
  std::vector<std::vector<Partition>> parts;
  for (int w = 1; w <= kOrder; ++w) parts.push_back(partitions_of(w));
  const MultidegreePoly zero(1);
  const MultidegreePoly one = MultidegreePoly::constant(1, 1);
  int checks = 0;
  for (int sample = 0; sample < 200; ++sample) {
    const int r = rank(rng);
    std::vector<MultidegreePoly> c_seq(kOrder + 1, zero);
    c_seq[0] = one;
    for (int k = 1; k <= r; ++k) c_seq[static_cast<std::size_t>(k)] = MultidegreePoly::constant(1, value(rng));
    const auto s_seq = series_inverse(c_seq, kOrder);
    for (const auto& by_weight : parts) {
      for (const auto& lambda : by_weight) {
        ++checks;
        if (!(schur_det(lambda, c_seq, zero, one) == schur_det(conjugate(lambda), s_seq, zero, one))) {
          return "sample " + std::to_string(sample) + " partition " + lambda.to_string();
        }
      }
    }
  }
  info = std::to_string(checks) + " determinant pairs";
  return {};
}

std::string dim_two_coefficients(std::mt19937_64&, std::string& info) {
  int checks = 0;
  for (int N = 4; N <= 12; ++N) {
    for (int a = 0; a <= 6; ++a) {
      const BigInt expected0 = binomial(N + 2, N) + BigInt(3 * a * (N + 1) - 12 * (a + 1));
      checks += 3;
      if (D_coeff(N, 2, a, 2) != 1) return "D2 at N=" + std::to_string(N) + " a=" + std::to_string(a);
      if (D_coeff(N, 2, a, 1) != -(N + 1) - 3 * a) return "D1 at N=" + std::to_string(N) + " a=" + std::to_string(a);
      if (D_coeff(N, 2, a, 0) != expected0) return "D0 at N=" + std::to_string(N) + " a=" + std::to_string(a);
    }
  }
  info = std::to_string(checks) + " coefficients";
  return {};
}

std::string flagship(std::mt19937_64&, std::string& info) {
  if (gamma_dim2(4, 4) != 34) return "gamma_dim2(4,4) = " + gamma_dim2(4, 4).get_str();
  const JetTower tower(ModelParams(4, 2));
  const auto above = tower.morse_certificate(4, {34, 34});
  const auto below = tower.morse_certificate(4, {33, 33});
  if (*above.value != 15) return "value at (34,34) = " + above.value->get_str();
  if (*below.value != -18) return "value at (33,33) = " + below.value->get_str();
  const auto frontier = uniform_positivity_frontier(above.difference, 200);
  if (!frontier || *frontier != 34) return "scan frontier is not 34";
  info = "gamma=34, values +15/-18, frontier 34";
  return {};
}

std::string kappa_one_pipeline(std::mt19937_64&, std::string& info) {
  int checks = 0;
  for (int c = 1; c <= 6; ++c) {
    for (int n = 1; n <= c; ++n) {
      const int N = n + c;
      const JetTower tower(ModelParams(N, n));
      for (int a : {0, N}) {
        ++checks;
        if (!(tower.morse_certificate(a).difference == morse_closed_form(N, n, a))) {
          return "mismatch at " + params_tag(N, n) + " a=" + std::to_string(a);
        }
      }
    }
  }
  info = std::to_string(checks) + " (N, n, a) cases";
  return {};
}

// The proof bounds the full power from below by the single monomial
// l_kappa^{b+n-1} l_{kappa-1}^{c+n-1} ... l_1^{c+n-1} (all l_i nef), and that
// monomial carries the degree-N part of the integral of s_b s_c^{kappa-1}.
std::string jet_dominant(std::mt19937_64&, std::string& info) {
  std::ostringstream summary;
  for (const auto& [n, c] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
    const ModelParams params(n + c, n);
    const JetTower tower(params);
    const int kappa = params.kappa();
    const std::string where = "n=" + std::to_string(n) + " c=" + std::to_string(c);
    JetClass sum(params, kappa);
    JetClass monomial = JetClass::one(params, kappa);
    for (int i = 1; i <= kappa; ++i) {
      const JetClass l = tower.ell_class(i).lift(kappa);
      sum += l;
      monomial = monomial * l.pow((i == kappa ? params.b() : c) + n - 1);
    }
    std::vector<int> indices{params.b()};
    for (int i = 1; i < kappa; ++i) indices.push_back(c);
    const MultidegreePoly target = tower.base_segre_integral(indices).dominant_part();
    if (target.total_degree() != params.N()) return where + ": integral of s_b s_c^(kappa-1) is not of degree N";

    const MultidegreePoly extracted = tower.integrate_jet(monomial).dominant_part();
    if (!(extracted == target)) return where + ": " + extracted.to_string() + " vs " + target.to_string();

    const MultidegreePoly full = tower.integrate_jet(sum.pow(jet_dimension(n, kappa))).dominant_part();
    const MultidegreePoly excess = full - target;
    if (full.total_degree() != params.N()) return where + ": full power is not of degree N";
    for (const auto& [exps, coeff] : excess.terms()) {
      if (coeff < 0) return where + ": full power falls below the bound: " + full.to_string();
    }
    summary << where << " bound " << target.to_string() << ", full " << full.to_string() << "; ";
  }
  info = summary.str();
  return {};
}

std::string degree_lemmas(std::mt19937_64& rng, std::string& info) {
  int cases = 0;
  std::uniform_int_distribution<int> pick_N(2, 8);
  // Random tuples for parts 1 and 3.
  while (cases < 400) {
    const int N = pick_N(rng);
    const int n = std::uniform_int_distribution<int>(1, N - 1)(rng);
    const ModelParams params(N, n);
    const JetTower tower(params);
    // Part 1: indices plus a positive power of h.
    {
      const int l = std::uniform_int_distribution<int>(1, n)(rng);
      int left = n - l;
      std::vector<int> indices;
      while (left > 0) {
        const int i = std::uniform_int_distribution<int>(1, left)(rng);
        indices.push_back(i);
        left -= i;
      }
      const Degree d = tower.base_segre_integral(indices, l).total_degree();
      ++cases;
      if (d && *d >= N) return "part 1 violated at " + params_tag(N, n);
    }
    // Part 3: kappa indices summing to n.
    {
      const int kappa = params.kappa();
      std::vector<int> indices(static_cast<std::size_t>(kappa), 0);
      for (int left = n; left > 0; --left) ++indices[std::uniform_int_distribution<std::size_t>(0, indices.size() - 1)(rng)];
      std::sort(indices.begin(), indices.end());
      bool hypothesis = indices[0] < params.b();
      if (indices[0] == params.b()) {
        for (std::size_t j = 1; j < indices.size(); ++j) hypothesis = hypothesis || indices[j] < params.c();
      }
      const Degree d = tower.base_segre_integral(indices).total_degree();
      if (hypothesis) {
        ++cases;
        if (d && *d >= N) return "part 3 violated at " + params_tag(N, n);
      } else if (indices[0] == params.b()) {
        // Then every other index equals c and the integral has full degree.
        ++cases;
        if (!d || *d != N) return "part 3 boundary case not of degree N at " + params_tag(N, n);
      }
    }
  }
  // Part 2: every partition of n into at most 4 parts, N <= 8.
  for (int N = 2; N <= 8; ++N) {
    for (int n = 1; n < N; ++n) {
      const ModelParams params(N, n);
      const JetTower tower(params);
      for (const Partition& lambda : partitions_of(n)) {
        if (lambda.length() > 4) continue;
        ++cases;
        const Degree d = tower.base_segre_integral(lambda.parts()).total_degree();
        const bool top = d && *d == N;
        if (top != (lambda.part(0) <= params.c())) return "part 2 violated at " + params_tag(N, n) + " " + lambda.to_string();
      }
    }
  }
  info = std::to_string(cases) + " integrands";
  return {};
}

// Strict positivity on the box [r, r + width]^c, r = ceil(threshold).
bool positive_on_grid(const MultidegreePoly& p, const Rational& threshold, int width) {
  const long start = ceil_rational(threshold).get_si();
  const int c = p.num_vars();
  std::vector<long> point(static_cast<std::size_t>(c), start);
  while (true) {
    if (p.eval(std::span<const long>(point)) <= 0) return false;
    int pos = 0;
    while (pos < c && point[static_cast<std::size_t>(pos)] == start + width) point[static_cast<std::size_t>(pos++)] = start;
    if (pos == c) return true;
    ++point[static_cast<std::size_t>(pos)];
  }
}

std::string threshold_soundness(std::mt19937_64&, std::string& info) {
  int instances = 0;
  for (int N = 4; N <= 12; ++N) {
    for (int n = 1; 2 * n <= N; ++n) {
      for (int a = 0; a <= 6; ++a) {
        std::vector<std::pair<int, Rational>> coeffs;
        for (int j = 0; j <= n; ++j) coeffs.emplace_back(j, Rational(D_coeff(N, n, a, j)));
        const Rational r = symmetric_positivity_threshold(coeffs, N - n, n);
        const int width = N - n <= 4 ? 3 : 1;
        ++instances;
        if (!positive_on_grid(morse_closed_form(N, n, a), r, width)) {
          return "cascade threshold fails at " + params_tag(N, n) + " a=" + std::to_string(a);
        }
      }
    }
  }
  for (int N = 2; N <= 7; ++N) {
    for (int n = 1; 2 * n <= N; ++n) {
      for (int a = 0; a <= 3; ++a) {
        const SchurReport report = positivity_report(ModelParams(N, n), a);
        for (const auto& rec : report.records) {
          ++instances;
          if (!positive_on_grid(rec.full, rec.threshold, N - n <= 3 ? 3 : 1)) {
            return "Schur threshold fails at " + params_tag(N, n) + " a=" + std::to_string(a) + " " + rec.lambda.to_string();
          }
        }
      }
    }
  }
  info = std::to_string(instances) + " thresholds";
  return {};
}

std::string tangency(std::mt19937_64& rng, std::string& info) {
  std::uniform_int_distribution<int> value(-4, 4);
  int charts = 0, fields = 0;
  for (int N = 1; N <= 4; ++N) {
    std::vector<std::vector<int>> degree_sets;
    for (int d1 = 1; d1 <= 3; ++d1) {
      degree_sets.push_back({d1});
      for (int d2 = 1; d2 <= 3; ++d2) degree_sets.push_back({d1, d2});
    }
    for (const auto& degrees : degree_sets) {
      const UniversalChart chart(N, degrees);
      ++charts;
      std::vector<std::pair<std::string, VectorField>> family;
      for (int j = 1; j <= N; ++j) family.emplace_back("T_" + std::to_string(j), build_Tj(chart, j));
      for (int i = 1; i <= chart.c(); ++i) {
        std::map<Exponents, Rational> free_data;
        const Exponents origin(static_cast<std::size_t>(N), 0);
        Exponents e1 = origin;
        e1[0] = 1;
        for (const auto& alpha : chart.exponents(i)) {
          int w = 0;
          for (int e : alpha) w += e;
          if (alpha == origin || alpha == e1 || w > N) continue;
          free_data[alpha] = value(rng);
        }
        family.emplace_back("solved_" + std::to_string(i), build_low_coeff_field(chart, i, free_data));
      }
      for (const auto& [name, field] : family) {
        ++fields;
        const std::string where = name + " at N=" + std::to_string(N) + " c=" + std::to_string(chart.c());
        if (!identically_tangent(chart, field)) return where + " is not identically tangent";
        const auto report = point_tangency_check(chart, field, 100, rng());
        if (!report.all_zero()) return where + " has nonzero sampled residuals";
        const PoleOrders& poles = field.pole_orders();
        if (name[0] == 'T' && poles.a_degree > 1) return where + " has a-degree " + std::to_string(poles.a_degree);
        if (name[0] == 's' && poles.z_degree > N) return where + " has z-degree " + std::to_string(poles.z_degree);
      }
    }
  }
  info = std::to_string(fields) + " fields on " + std::to_string(charts) + " charts, 100 samples each";
  return {};
}

std::string rough_consistency(std::mt19937_64&, std::string& info) {
  for (int N = 4; N <= 12; ++N) {
    for (int a = 0; a <= 6; ++a) {
      if (gamma_rough(N, 2, a) < gamma_dim2(N, a)) return "rough below dim2 at N=" + std::to_string(N) + " a=" + std::to_string(a);
    }
  }
  if (gamma_limit_bound(2) != 96) return "limit bound is " + gamma_limit_bound(2).get_str();
  const Rational floor_value(gamma_rough_limit(2));
  Rational previous = gamma_rough(4, 2, 4);
  for (int N = 5; N <= 200; ++N) {
    const Rational current = gamma_rough(N, 2, N);
    if (!(current < previous)) return "not decreasing at N=" + std::to_string(N);
    if (current <= floor_value) return "dropped to the limit at N=" + std::to_string(N);
    previous = current;
  }
  info = "gamma_rough(200,2,200) ~ " + std::to_string(previous.get_d()) + ", limit " + floor_value.get_str() +
         " >= 96";
  return {};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  Check run;
};

}  // namespace

std::vector<AcceptanceResult> run_acceptance(std::uint64_t seed, int only) {
  const std::vector<Criterion> criteria = {
      {1, "segre closed form and twist agree with product formula", 10, segre_forms},
      {2, "schur duality on random class sequences", 30, duality},
      {3, "dimension-two D coefficients", 0, dim_two_coefficients},
      {4, "flagship threshold 34 for P^4 surfaces", 1, flagship},
      {5, "kappa=1 tower pipeline equals closed form", 60, kappa_one_pipeline},
      {6, "jet dominant identity", 300, jet_dominant},
      {7, "intersection degree lemmas", 60, degree_lemmas},
      {8, "threshold soundness by grid evaluation", 60, threshold_soundness},
      {9, "vector field tangency and pole orders", 120, tangency},
      {10, "rough bound consistency and limit", 10, rough_consistency},
  };
  std::vector<AcceptanceResult> results;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(criterion.id));
    AcceptanceResult r{criterion.id, criterion.name, false, {}, 0, criterion.limit};
    const auto start = std::chrono::steady_clock::now();
    std::string info;
    try {
      const std::string failure = criterion.run(rng, info);
      r.passed = failure.empty();
      r.detail = failure.empty() ? info : failure;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += " (over runtime limit)";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const AcceptanceResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (";
  out.setf(std::ios::fixed);
  out.precision(2);
  out << r.seconds << " s";
  if (r.limit_seconds > 0) out << " / limit " << r.limit_seconds << " s";
  out << "): " << r.detail;
  return out.str();
}

}  // namespace jetci
