#include "jetci/schur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "jetci/bounds.hpp"

namespace jetci {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int l) {
  if (l < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(l, l);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  const int first = lambda.part(0);
  for (int col = 0; col < first; ++col) {
    int count = 0;
    while (count < lambda.length() && lambda.part(count) > col) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

namespace {

bool positive_combination(const MultidegreePoly& p) {
  bool any_positive = false;
  for (const auto& [exps, coeff] : p.terms()) {
    if (coeff < 0) return false;
    if (coeff > 0) any_positive = true;
  }
  return any_positive;
}

}  // namespace

SchurReport positivity_report(const ModelParams& params, int a) {
  const int n = params.n();
  const int c = params.c();
  if (c < n) {
    throw std::domain_error("positivity requires c >= n (codimension at least the dimension); got c=" +
                            std::to_string(c) + ", n=" + std::to_string(n));
  }

  const std::vector<ChowClass> segre = segre_cotangent(params, -a);
  // Coefficient rings for the two determinants taken entrywise in Z[d].
  std::vector<MultidegreePoly> segre_tilde;
  std::vector<MultidegreePoly> segre_dominant;
  std::vector<MultidegreePoly> chern_tilde;
  const std::vector<ChowClass> chern = chern_line_sum(params, std::vector<int>(static_cast<std::size_t>(c), 0));
  for (int j = 0; j <= n; ++j) {
    segre_tilde.push_back(segre[j].coeff(j));
    segre_dominant.push_back(segre[j].coeff(j).dominant_part());
    chern_tilde.push_back(chern[j].coeff(j));
  }
  const MultidegreePoly zero_poly(c);
  const MultidegreePoly one_poly = MultidegreePoly::constant(c, 1);
  const ChowClass zero_class(params);
  const ChowClass one_class = ChowClass::one(params);

  SchurReport report{params, a, {}, Rational(0)};
  for (int l = 1; l <= n; ++l) {
    for (const Partition& lambda : partitions_of(l)) {
      SchurRecord rec;
      rec.lambda = lambda;
      rec.conjugate = conjugate(lambda);

      const ChowClass det = schur_det(rec.conjugate, segre, zero_class, one_class);
      if (!det.is_pure(l)) throw std::logic_error("positivity_report: Schur determinant is not homogeneous");
      rec.full = det.coeff(l);
      rec.dominant = rec.full.dominant_part();
      rec.dominant_positive = positive_combination(rec.dominant);

      const MultidegreePoly via_chern = schur_det(rec.conjugate, chern_tilde, zero_poly, one_poly);
      rec.schur_identity = via_chern == rec.dominant;
      const MultidegreePoly det_of_dominant = schur_det(rec.conjugate, segre_dominant, zero_poly, one_poly);
      rec.dominant_determinant_identity = !det_of_dominant.is_zero() && det_of_dominant == rec.dominant;

      // The Schur-polynomial route is positive exactly when the identity holds
      // (a Schur polynomial of an ample sum); the monomial check is independent.
      if (rec.schur_identity != rec.dominant_positive) {
        throw std::logic_error("positivity_report: certificates disagree for partition " + lambda.to_string());
      }

      std::vector<std::pair<int, BigInt>> coeffs;
      if (rec.full.is_multilinear()) coeffs = express_in_elementary(rec.full);
      if (!coeffs.empty() && coeffs.front().second > 0) {
        const Rational lead = coeffs.front().second;
        std::vector<std::pair<int, Rational>> normalized;
        for (const auto& [j, v] : coeffs) normalized.emplace_back(j, Rational(v) / lead);
        rec.threshold = symmetric_positivity_threshold(normalized, c, coeffs.front().first);
        rec.threshold_method = "elementary-cascade";
      } else {
        const auto shifted = shift_positivity_threshold(rec.full);
        if (!shifted) {
          throw std::logic_error("positivity_report: no uniform threshold certificate for partition " +
                                 lambda.to_string());
        }
        rec.threshold = *shifted;
        rec.threshold_method = "taylor-shift";
      }
      report.threshold = std::max(report.threshold, rec.threshold);
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace jetci
