#pragma once

// The A_l chain form kappa(k) = sum k_i^2 - sum k_i k_{i+1}, the Cartan
// bilinear form (x|y) with (x|x) = 2 kappa(x), and exact enumeration of the
// lattice points below a bound for exponents c*kappa(k) + lin.k + const.

#include "qsi/qseries.hpp"
#include "qsi/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qsi {

class KappaForm {
 public:
  explicit KappaForm(std::size_t dim) : dim_(dim) {}
  std::size_t dim() const { return dim_; }

  /// Throws std::invalid_argument on dimension mismatch.
  Integer operator()(std::span<const std::int64_t> k) const;
  Rational operator()(std::span<const Rational> x) const;

 private:
  std::size_t dim_;
};

/// (x|y) with Gram matrix the A_l Cartan matrix: 2 on the diagonal, -1 for
/// adjacent indices.
class CartanForm {
 public:
  explicit CartanForm(std::size_t dim) : dim_(dim) {}
  std::size_t dim() const { return dim_; }

  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const;

 private:
  std::size_t dim_;
};

/// Per-point integer weight of a lattice sum, evaluated on s = k_1 + ... + k_l.
enum class WeightShape {
  unit,         // 1
  alternating,  // (-1)^s
  jacobi,       // 4s + 1
};

std::string_view to_string(WeightShape w);
WeightShape parse_weight_shape(std::string_view name);

/// sum over k in Z^dim of weight(k) * q^{scale*kappa(k) + linear.k + offset}.
struct LatticeSum {
  std::size_t dim = 0;
  Rational scale{1};
  std::vector<Rational> linear;
  Rational offset{0};
  WeightShape weight = WeightShape::unit;

  /// Throws std::invalid_argument("indefinite exponent function") when
  /// scale <= 0, or on a linear vector of the wrong length.
  void validate() const;

  Rational exponent(std::span<const std::int64_t> k) const;
  std::int64_t weight_at(std::span<const std::int64_t> k) const;

  friend bool operator==(const LatticeSum&, const LatticeSum&) = default;
};

struct LatticePoint {
  std::vector<std::int64_t> k;
  Rational exponent;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Every k with exponent(k) <= bound, exactly once, in lexicographic order.
/// Coordinates are bounded one at a time by completing the square in exact
/// rational arithmetic.
std::vector<LatticePoint> lattice_enumerate(const LatticeSum& sum, const Rational& bound);

/// Same contract as lattice_enumerate, by scanning the axis-aligned box around
/// the real minimizer that a certified lower bound on the smallest eigenvalue
/// of kappa guarantees to contain every solution.
std::vector<LatticePoint> lattice_enumerate_oracle(const LatticeSum& sum, const Rational& bound);

/// The weighted lattice sum as a series known through `bound`. With
/// threads > 1 the outermost coordinate is split across workers; the result
/// does not depend on the thread count.
QSeries lattice_sum_series(const LatticeSum& sum, const Rational& bound, unsigned threads = 0);

/// Smallest exponent attained on Z^dim.
Rational lattice_minimum(const LatticeSum& sum);

/// Rational lower bound on the smallest eigenvalue of the Gram matrix of
/// kappa (half the A_dim Cartan matrix), 1 - cos(pi/(dim+1)).
Rational kappa_min_eigenvalue_bound(std::size_t dim);

/// Integers x with (x - center)^2 <= radius_sq, as a closed range; empty when lo > hi.
struct IntegerWindow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
};

IntegerWindow integer_window(const Rational& center, const Rational& radius_sq);

}  // namespace qsi
