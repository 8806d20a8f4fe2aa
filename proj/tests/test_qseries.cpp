#include "qsi/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace qsi;

namespace {

QSeries ints(std::vector<long> c, std::int64_t order, std::int64_t denom = 1, std::int64_t lo = 0) {
  std::vector<Integer> v(c.begin(), c.end());
  return QSeries::from_coeffs(denom, lo, std::move(v), order);
}

// Partitions of n into parts <= max, by plain recursion.
long count_partitions(long n, long max) {
  if (n == 0) return 1;
  long total = 0;
  for (long p = std::min(n, max); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

QSeries random_series(std::mt19937& rng, std::int64_t order, bool unit) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Integer> c(order + 1);
  for (auto& x : c) x = coeff(rng);
  if (unit) c[0] = (rng() & 1) ? 1 : -1;
  return QSeries::from_coeffs(1, 0, std::move(c), order);
}

}  // namespace

TEST_CASE("addition cancels and merges grids") {
  auto a = ints({1, -1}, 10);
  auto b = ints({0, 1}, 10);
  auto s = a + b;
  CHECK(s == QSeries::one(10));
  CHECK(s.order_exponent() == 10);

  CHECK(a + QSeries::zero(1, 10) == a);

  auto h = ints({1, 1}, 4, 2) + ints({1, 1}, 2);
  CHECK(h.denom() == 2);
  CHECK(h.coeff_at(0) == 2);
  CHECK(h.coeff_at(ratio(1, 2)) == 1);
  CHECK(h.coeff_at(1) == 1);
}

TEST_CASE("multiplication telescopes") {
  const std::int64_t t = 12;
  auto geo = ints(std::vector<long>(t + 1, 1), t);
  CHECK(ints({1, -1}, t) * geo == QSeries::one(t));
  CHECK(geo * QSeries::one(t) == geo);
}

TEST_CASE("inverse") {
  CHECK(inverse(ints({1, -1}, 5)) == ints({1, 1, 1, 1, 1, 1}, 5));

  auto part = inverse(phi_series(1, 10));
  for (long n = 0; n <= 10; ++n) CHECK(part.coeff_at(n) == count_partitions(n, n));
  CHECK(part.coeff_at(10) == 42);

  auto p = phi_series(1, 20);
  CHECK(p * inverse(p) == QSeries::one(20));

  auto u = ints({1, 3, -2}, 8);
  auto shifted = u.shifted(1);
  auto inv = inverse(shifted);
  CHECK(inv.lowest_exponent() == -1);
  CHECK(inv == inverse(u).shifted(-1));

  CHECK_THROWS_WITH_AS(inverse(QSeries::zero(1, 5)), "non-invertible", std::domain_error);
}

TEST_CASE("phi expansion") {
  CHECK(phi_series(1, 7) == ints({1, -1, -1, 0, 0, 1, 0, 1}, 7));

  auto third = phi_series(ratio(1, 3), 1);
  CHECK(third.denom() == 3);
  CHECK(third == ints({1, -1, -1, 0}, 3, 3));

  CHECK(phi_series(5, 4) == QSeries::one(4));
  CHECK_THROWS_AS(phi_series(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(phi_series(-1, 4), std::invalid_argument);
}

TEST_CASE("phi matches the pentagonal pattern") {
  const std::int64_t t = 400;
  std::vector<Integer> expected(t + 1);
  for (long k = 0;; ++k) {
    long a = k * (3 * k - 1) / 2, b = k * (3 * k + 1) / 2;
    if (a > t) break;
    Integer sign = (k % 2) ? -1 : 1;
    expected[a] = sign;
    if (b <= t) expected[b] = sign;
  }
  CHECK(phi_series(1, t) == QSeries::from_coeffs(1, 0, expected, t));
}

TEST_CASE("product specs") {
  ProductSpec gauss({{2, 2}, {1, -1}});
  CHECK(product_series(gauss, 10) == ints({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}, 10));
  CHECK(product_series(ProductSpec{}, 10) == QSeries::one(10));

  ProductSpec cancel({{1, 1}, {1, -1}});
  CHECK(cancel.empty());
  CHECK(product_series(cancel, 10) == QSeries::one(10));

  ProductSpec merged({{3, 4}, {2, 2}, {1, -2}, {3, -1}});
  CHECK(merged == ProductSpec({{1, -2}, {2, 2}, {3, 3}}));
  CHECK_THROWS_AS(ProductSpec({{0, 1}}), std::invalid_argument);
}

TEST_CASE("normalization") {
  auto u = ints({1, 1}, 10);
  auto n = normalize_shift(u.shifted(3));
  CHECK(n.shift == 3);
  CHECK(n.series == u.truncated(10));

  auto same = normalize_shift(u);
  CHECK(same.shift == 0);
  CHECK(same.series == u);

  auto half = normalize_shift(ints({1, 1}, 20, 2).shifted(ratio(9, 2)));
  CHECK(half.shift == ratio(9, 2));
  CHECK(half.series == ints({1, 1}, 20, 2));

  CHECK_THROWS_AS(normalize_shift(QSeries::zero(1, 5)), std::domain_error);
}

TEST_CASE("comparison") {
  auto a = phi_series(1, 30);
  auto r = series_compare(a, a);
  CHECK(r.match);
  CHECK(r.checked_through == 30);
  CHECK(r.lhs_shift == r.rhs_shift);

  auto bad = series_compare(ints({1, 1}, 5), ints({1, 2}, 5));
  REQUIRE_FALSE(bad.match);
  REQUIRE(bad.first_mismatch);
  CHECK(bad.first_mismatch->exponent == 1);
  CHECK(bad.first_mismatch->lhs_coeff == 1);
  CHECK(bad.first_mismatch->rhs_coeff == 2);

  auto x = a.shifted(ratio(1, 3));
  auto fwd = series_compare(x, a);
  auto back = series_compare(a, x);
  CHECK(fwd.match);
  CHECK(back.match);
  CHECK(fwd.lhs_shift == back.rhs_shift);
  CHECK(fwd.rhs_shift == back.lhs_shift);
}

TEST_CASE("rescaling round trip") {
  auto a = phi_series(1, 15);
  for (std::int64_t d : {2, 3, 7, 12}) {
    auto fine = a.rescaled(d);
    CHECK(fine.denom() == d);
    CHECK(fine.rescaled(1) == a);
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t t = 5 + static_cast<std::int64_t>(rng() % 20);
    auto a = random_series(rng, t, false);
    auto b = random_series(rng, t, false);
    auto c = random_series(rng, t, false);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    auto u = random_series(rng, t, true);
    CHECK(u * inverse(u) == QSeries::one(t));
    CHECK(power(u, -3) * power(u, 3) == QSeries::one(t));
  }
}

TEST_CASE("text rendering") {
  CHECK(to_text(phi_series(1, 7)) == "1 - q - q^2 + q^5 + q^7 + O(q^8)");
  CHECK(to_text(phi_series(ratio(1, 3), 1)) == "1 - q^(1/3) - q^(2/3) + O(q^(4/3))");
  CHECK(to_text(ints({3}, 2, 1, -1)) == "3*q^(-1) + O(q^3)");
  CHECK(to_text(QSeries::zero(1, 4)) == "O(q^5)");
}
