#include "qsi/qseries.hpp"
#include "qsi/quadform.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace qsi;

namespace {

std::set<std::vector<std::int64_t>> point_set(const std::vector<LatticePoint>& pts) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& p : pts) out.insert(p.k);
  return out;
}

LatticeSum random_sum(std::mt19937& rng) {
  LatticeSum s;
  s.dim = 1 + rng() % 4;
  s.scale = ratio(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 2));
  for (std::size_t i = 0; i < s.dim; ++i)
    s.linear.push_back(ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
  s.offset = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
  return s;
}

}  // namespace

TEST_CASE("kappa values") {
  KappaForm k3(3);
  std::vector<std::int64_t> e1{1, 0, 0}, ones{1, 1, 1}, v{2, -1, 3};
  CHECK(k3(e1) == 1);
  CHECK(k3(ones) == 1);
  CHECK(k3(v) == 19);
  for (std::size_t l = 1; l <= 9; ++l) {
    std::vector<std::int64_t> all(l, 1);
    CHECK(KappaForm(l)(all) == 1);
  }
  std::vector<std::int64_t> wrong{1, 2};
  CHECK_THROWS_AS(k3(wrong), std::invalid_argument);
}

TEST_CASE("Cartan form") {
  CartanForm c(3);
  std::vector<Rational> e1{1, 0, 0}, e2{0, 1, 0};
  CHECK(c(e1, e1) == 2);
  CHECK(c(e1, e2) == -1);
  std::vector<Rational> g{ratio(1, 4), ratio(2, 4), ratio(3, 4)};
  CHECK(c(g, g) == ratio(3, 4));
}

TEST_CASE("kappa is positive on nonzero integer vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t l = 1 + trial % 8;
    std::vector<std::int64_t> k(l);
    do {
      for (auto& x : k) x = coord(rng);
    } while (std::all_of(k.begin(), k.end(), [](auto x) { return x == 0; }));
    CHECK(KappaForm(l)(k) >= 1);
  }
}

TEST_CASE("Cartan norm is twice kappa") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t l = 1 + trial % 6;
    std::vector<Rational> x(l);
    for (auto& v : x) v = ratio(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
    CHECK(CartanForm(l)(x, x) == 2 * KappaForm(l)(x));
  }
}

TEST_CASE("Gauss sum enumeration") {
  LatticeSum g{1, 2, {1}, 0, WeightShape::unit};
  auto pts = lattice_enumerate(g, 10);
  REQUIRE(pts.size() == 5);
  const std::int64_t ks[] = {-2, -1, 0, 1, 2};
  const long es[] = {6, 1, 0, 3, 10};
  for (int i = 0; i < 5; ++i) {
    CHECK(pts[i].k == std::vector<std::int64_t>{ks[i]});
    CHECK(pts[i].exponent == es[i]);
  }
  auto s = lattice_sum_series(g, 10);
  CHECK(s == QSeries::from_coeffs(1, 0, {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}, 10));
}

TEST_CASE("one-dimensional sums follow the quadratic formula") {
  for (long c = 1; c <= 5; ++c)
    for (long b = -4; b <= 4; ++b) {
      LatticeSum s{1, c, {b}, 0, WeightShape::unit};
      std::set<std::vector<std::int64_t>> expected;
      for (std::int64_t k = -50; k <= 50; ++k)
        if (c * k * k + b * k <= 40) expected.insert({k});
      CHECK(point_set(lattice_enumerate(s, 40)) == expected);
    }
}

TEST_CASE("empty below the minimum and constant term") {
  LatticeSum s{3, 2, {0, 0, 0}, 5, WeightShape::unit};
  CHECK(lattice_enumerate(s, 4).empty());
  LatticeSum z{4, ratio(3, 2), {0, 0, 0, 0}, 0, WeightShape::unit};
  auto series = lattice_sum_series(z, 1);
  CHECK(series.coeff_at(0) == 1);
  CHECK(lattice_minimum(z) == 0);
}

TEST_CASE("indefinite scale is rejected") {
  LatticeSum s{2, 0, {0, 0}, 0, WeightShape::unit};
  CHECK_THROWS_WITH_AS(s.validate(), "indefinite exponent function", std::invalid_argument);
  s.scale = -1;
  CHECK_THROWS_AS(lattice_enumerate(s, 5), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the box oracle") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 150; ++trial) {
    LatticeSum s = random_sum(rng);
    Rational t = static_cast<long>(rng() % 31);
    auto fast = lattice_enumerate(s, t);
    auto slow = lattice_enumerate_oracle(s, t);
    CHECK(fast == slow);
    for (const auto& p : fast) CHECK(p.exponent <= t);
  }
}

TEST_CASE("enumeration is monotone in the bound") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    LatticeSum s = random_sum(rng);
    auto small = point_set(lattice_enumerate(s, 10));
    auto large = point_set(lattice_enumerate(s, 20));
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("negating the linear term reflects the points") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    LatticeSum s = random_sum(rng);
    LatticeSum r = s;
    for (auto& v : r.linear) v = -v;
    std::set<std::vector<std::int64_t>> reflected;
    for (auto k : point_set(lattice_enumerate(r, 20))) {
      for (auto& x : k) x = -x;
      reflected.insert(k);
    }
    CHECK(point_set(lattice_enumerate(s, 20)) == reflected);
  }
}

TEST_CASE("series is independent of the thread count") {
  LatticeSum s{5, 5, {2, -1, -1, 3, -1}, 0, WeightShape::alternating};
  auto seq = lattice_sum_series(s, 40, 0);
  CHECK(lattice_sum_series(s, 40, 4) == seq);
  CHECK(lattice_sum_series(s, 40, 3) == seq);
}

TEST_CASE("integer windows") {
  auto w = integer_window(ratio(1, 2), ratio(9, 4));
  CHECK(w.lo == -1);
  CHECK(w.hi == 2);
  CHECK(integer_window(ratio(1, 2), ratio(1, 8)).empty());
  auto exact = integer_window(0, 4);
  CHECK(exact.lo == -2);
  CHECK(exact.hi == 2);
}

TEST_CASE("eigenvalue bound is below the true minimum") {
  for (std::size_t l = 1; l <= 12; ++l) {
    double truth = 1 - std::cos(3.141592653589793 / static_cast<double>(l + 1));
    CHECK(kappa_min_eigenvalue_bound(l).get_d() <= truth);
    CHECK(kappa_min_eigenvalue_bound(l) > 0);
  }
}
