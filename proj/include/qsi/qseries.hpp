#pragma once

// Truncated q-series with rational exponents on a common grid and
// arbitrary-precision integer coefficients.
//
// A QSeries with denominator D stores coefficients for the exponents
// lo/D, (lo+1)/D, ..., order/D. Coefficients below lo are zero, coefficients
// above order are unknown. Every exponent of the underlying (untruncated)
// series is a multiple of 1/D.

#include "qsi/rational.hpp"
#include "qsi/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsi {

class QSeries {
 public:
  /// The zero series, known through exponent 0.
  QSeries();

  /// Builds a series from `coeffs`, where coeffs[i] is the coefficient of
  /// q^{(lo+i)/denom}. Entries past `order` are dropped, missing entries up to
  /// `order` are taken as zero, and leading zeros are stripped.
  static QSeries from_coeffs(std::int64_t denom, std::int64_t lo, std::vector<Integer> coeffs,
                             std::int64_t order);

  /// Zero through order/denom.
  static QSeries zero(std::int64_t denom, std::int64_t order);

  /// c * q^exponent, truncated at `order` (absolute, rational).
  static QSeries monomial(const Integer& c, const Rational& exponent, const Rational& order);

  static QSeries one(const Rational& order) { return monomial(1, 0, order); }

  std::int64_t denom() const { return denom_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t order() const { return order_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.front() == 0; }

  Rational lowest_exponent() const { return ratio(lo_, denom_); }
  Rational order_exponent() const { return ratio(order_, denom_); }

  /// Coefficient of q^exponent. Off-grid exponents and exponents below lo give
  /// zero; exponents above order throw std::out_of_range.
  Integer coeff_at(const Rational& exponent) const;

  /// Same series on the grid 1/new_denom. Refining (new_denom a multiple of
  /// denom) extends the known range up to the next old grid point. Coarsening
  /// requires every nonzero exponent to lie on the coarser grid and asserts
  /// that the untruncated series does as well.
  QSeries rescaled(std::int64_t new_denom) const;

  /// Drops everything above the exponent `bound`.
  QSeries truncated(const Rational& bound) const;

  /// Multiplies by q^shift; the grid is refined if needed.
  QSeries shifted(const Rational& shift) const;

  QSeries operator-() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::int64_t denom_ = 1;
  std::int64_t lo_ = 0;
  std::int64_t order_ = 0;
  std::vector<Integer> coeffs_{Integer(0)};
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);

/// Truncated Cauchy product; known through min(a.order + b.lo, b.order + a.lo).
QSeries operator*(const QSeries& a, const QSeries& b);

/// Multiplicative inverse. The lowest coefficient must be +1 or -1 so the
/// inverse stays integral; zero series throw std::domain_error("non-invertible").
QSeries inverse(const QSeries& a);

/// a^e for e >= 0 by repeated squaring; negative e inverts first.
QSeries power(const QSeries& a, long e);

/// prod_{j>=1} (1 - q^{scale*j}) through exponent `bound`.
QSeries phi_series(const Rational& scale, const Rational& bound);

/// phi(q^scale)^power.
struct PhiFactor {
  Rational scale;
  long power = 0;

  friend bool operator==(const PhiFactor&, const PhiFactor&) = default;
};

/// A finite product prod phi(q^a)^b, kept canonical: scales strictly
/// increasing and pairwise distinct, zero powers dropped.
class ProductSpec {
 public:
  ProductSpec() = default;
  explicit ProductSpec(std::vector<PhiFactor> factors);

  const std::vector<PhiFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

 private:
  std::vector<PhiFactor> factors_;
};

QSeries product_series(const ProductSpec& spec, const Rational& bound);

struct NormalizedSeries {
  QSeries series;
  Rational shift;
};

/// Splits off the leading monomial power: returns (a * q^{-shift}, shift) with
/// the result starting at exponent 0. Throws std::domain_error on zero.
NormalizedSeries normalize_shift(const QSeries& a);

/// Normalizes both sides and compares them coefficientwise through the
/// smaller guaranteed order. Zero compares equal to zero (shift 0).
VerifyReport series_compare(const QSeries& lhs, const QSeries& rhs);

/// "1 - q - q^2 + 3*q^(5/2) + O(q^3)".
std::string to_text(const QSeries& a);

}  // namespace qsi
