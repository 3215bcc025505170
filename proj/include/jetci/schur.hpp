#pragma once

// Partitions, Schur determinants Δ_λ(c) = det(c_{λ_i + j - i}) and the
// numerical positivity certificate for Omega_X(-a) when c >= n.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jetci/chow.hpp"
#include "jetci/polyring.hpp"

namespace jetci {

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// λ_i (0-based), zero past the last part.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of l in reverse lexicographic order: (l), (l-1, 1), ...
std::vector<Partition> partitions_of(int l);

Partition conjugate(const Partition& lambda);

/// det[(c_{λ_i + j - i})_{1 <= i, j <= length}] over any commutative ring.
/// classes[k] is c_k for k >= 1; c_0 is `one`, indices that are negative or
/// past the end are `zero`. Division-free Laplace expansion, memoized over
/// column subsets.
template <class Ring>
Ring schur_det(const Partition& lambda, const std::vector<Ring>& classes, const Ring& zero, const Ring& one) {
  const int len = lambda.length();
  if (len == 0) return one;
  auto entry = [&](int row, int col) -> const Ring& {
    const int index = lambda.part(row) + col - row;
    if (index == 0) return one;
    if (index < 0 || index >= static_cast<int>(classes.size())) return zero;
    return classes[static_cast<std::size_t>(index)];
  };

  // minors[mask] = determinant of rows (len - |mask|)..len-1 restricted to the
  // columns in mask, listed in increasing order.
  const std::uint32_t full = (std::uint32_t{1} << len) - 1;
  std::map<std::uint32_t, Ring> minors;
  minors.emplace(0u, one);
  for (int size = 1; size <= len; ++size) {
    const int row = len - size;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      Ring acc = zero;
      int position = 0;
      for (int col = 0; col < len; ++col) {
        if (!(mask & (std::uint32_t{1} << col))) continue;
        const Ring& a = entry(row, col);
        if (!(a == zero)) {
          const Ring& minor = minors.at(mask & ~(std::uint32_t{1} << col));
          if (position % 2 == 0) {
            acc = acc + a * minor;
          } else {
            acc = acc - a * minor;
          }
        }
        ++position;
      }
      minors.emplace(mask, std::move(acc));
    }
  }
  return minors.at(full);
}

struct SchurRecord {
  Partition lambda;
  Partition conjugate;
  /// h^l coefficient of Δ_{λ̄}(s(Omega_X(-a))).
  MultidegreePoly full{1};
  MultidegreePoly dominant{1};
  /// All monomial coefficients of the dominant part are >= 0 and one is > 0.
  bool dominant_positive = false;
  /// dominant == Δ_{λ̄}(c(⊕ O(d_i))), the Schur polynomial of an ample sum.
  bool schur_identity = false;
  /// dominant == det of the dominant parts of the Segre entries.
  bool dominant_determinant_identity = false;
  Rational threshold;
  std::string threshold_method;
};

struct SchurReport {
  ModelParams params;
  int a = 0;
  std::vector<SchurRecord> records;
  /// Sufficient uniform degree threshold: max over records.
  Rational threshold;
};

/// Throws std::domain_error unless c >= n. Throws std::logic_error if the two
/// positivity certificates for some partition disagree.
SchurReport positivity_report(const ModelParams& params, int a);

}  // namespace jetci
