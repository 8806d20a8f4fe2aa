#pragma once

// Partition-indexed data for level-one sl_n-hat modules L(Lambda_k) and the
// two ways of computing their specialized characters: the theta-sum
// character formula over the shifted root lattice, and the trace formula
// indexed by a partition of n.

#include "qsi/qseries.hpp"
#include "qsi/quadform.hpp"
#include "qsi/rational.hpp"
#include "qsi/report.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qsi {

/// A partition n_1 <= ... <= n_r of n, all parts >= 1.
class Partition {
 public:
  /// Throws std::invalid_argument on empty, non-positive or non-ascending parts.
  explicit Partition(std::vector<std::int64_t> parts);

  /// "1,3" -> {1, 3}.
  static Partition parse(std::string_view text);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t n() const { return n_; }
  std::size_t blocks() const { return parts_.size(); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t n_ = 0;
};

/// All partitions of n, each ascending, in lexicographic order.
std::vector<Partition> partitions_of(std::int64_t n);

/// N' = lcm(parts) when N'(1/n_i + 1/n_j) is even for every pair (i = j
/// included), otherwise 2N'.
std::int64_t compute_modulus(const Partition& p);

/// The specialization vector s_0..s_{n-1}: s_0 = N(n_1+n_r)/(2 n_1 n_r), then
/// per block i a run of n_i - 1 entries N/n_i, consecutive blocks separated by
/// N((n_i+n_{i+1})/(2 n_i n_{i+1}) - 1). Throws std::logic_error if an entry is
/// not integral or the entries do not sum to N.
std::vector<std::int64_t> compute_specialization(const Partition& p, std::int64_t modulus);

struct PartitionData {
  Partition partition;
  std::int64_t n = 0;
  std::int64_t modulus = 0;  // N
  std::vector<std::int64_t> s;

  explicit PartitionData(Partition p);
};

/// Coefficients c_1..c_{n-1} of the finite fundamental weight in the simple
/// roots: c_i = min(i,k)(n - max(i,k))/n. k = 0 gives zero.
std::vector<Rational> fundamental_weight_coeffs(std::int64_t n, std::int64_t k);

struct WeightConfig {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<Rational> coeffs;

  WeightConfig(std::int64_t n, std::int64_t k) : n(n), k(k), coeffs(fundamental_weight_coeffs(n, k)) {}
};

/// Character side before q^const: numerator lattice sum over gamma = k + c in
/// the shifted root lattice with exponent (N/2)|gamma|^2 - sum_i s_i gamma_i,
/// divided by phi(q^N)^{n-1}.
struct SpecializedCharacter {
  PartitionData data;
  WeightConfig weight;
  LatticeSum numerator;
  ProductSpec denominator;
};

SpecializedCharacter specialized_character(const Partition& p, std::int64_t k);

/// The character side through exponent lead + window, where lead is its
/// lowest exponent. Throws std::invalid_argument for k outside 0..n-1.
QSeries specialized_character_series(const Partition& p, std::int64_t k, const Rational& window,
                                     unsigned threads = 0);

/// A point of the constrained sum k_1 + ... + k_r = k with its exponent
/// (N/2) sum k_i^2 / n_i.
struct ConstrainedPoint {
  std::vector<std::int64_t> k;
  Rational exponent;
};

/// Every constrained point with exponent <= bound, lexicographic in
/// (k_1, ..., k_{r-1}); k_r is eliminated as k - sum of the others.
std::vector<ConstrainedPoint> constrained_enumerate(const PartitionData& d, std::int64_t k,
                                                    const Rational& bound);

Rational constrained_minimum(const PartitionData& d, std::int64_t k);

/// The constrained sum as a series known through `bound`.
QSeries constrained_sum_series(const PartitionData& d, std::int64_t k, const Rational& bound);

/// The trace side: prod(1 - q^{jN}) * constrained sum / prod_i phi(q^{N/n_i}),
/// through exponent lead + window.
QSeries trace_series(const Partition& p, std::int64_t k, const Rational& window);

/// Compares the two sides above through `window` past their leading terms.
/// With threads > 1 the sides are computed concurrently.
VerifyReport verify_proposition(const Partition& p, std::int64_t k, const Rational& window, unsigned threads = 0);

}  // namespace qsi
