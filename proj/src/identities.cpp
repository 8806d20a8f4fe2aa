#include "qsi/identities.hpp"

#include <chrono>
#include <stdexcept>

namespace qsi {

namespace {

LatticeSum one_variable(Rational scale, Rational linear, WeightShape weight) {
  LatticeSum s;
  s.dim = 1;
  s.scale = std::move(scale);
  s.linear = {std::move(linear)};
  s.weight = weight;
  return s;
}

void check_m(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer, got " + std::to_string(m));
}

}  // namespace

const std::vector<std::string>& classical_identity_names() {
  static const std::vector<std::string> names{"euler", "jacobi", "gauss_a", "gauss_b"};
  return names;
}

IdentitySpec classical_identity(std::string_view name) {
  // For l = 1, kappa(n) = n^2.
  if (name == "euler")  // sum (-1)^n q^{(3n^2+n)/2}
    return {"euler", ProductSpec({{1, 1}}), one_variable(ratio(3, 2), ratio(1, 2), WeightShape::alternating), {}};
  if (name == "jacobi")  // sum (4n+1) q^{2n^2+n}
    return {"jacobi", ProductSpec({{1, 3}}), one_variable(2, 1, WeightShape::jacobi), {}};
  if (name == "gauss_a")  // sum (-1)^n q^{n^2}
    return {"gauss_a", ProductSpec({{1, 2}, {2, -1}}), one_variable(1, 0, WeightShape::alternating), {}};
  if (name == "gauss_b")  // sum q^{2n^2+n}
    return {"gauss_b", ProductSpec({{2, 2}, {1, -1}}), one_variable(2, 1, WeightShape::unit), {}};
  throw std::invalid_argument("unknown classical identity '" + std::string(name) + "'");
}

IdentitySpec class1_identity(std::int64_t m) {
  check_m(m);
  const std::int64_t l = 4 * m - 1;
  LatticeSum rhs;
  rhs.dim = static_cast<std::size_t>(l);
  rhs.scale = l;
  rhs.linear.assign(rhs.dim, Rational(-1));
  rhs.linear[0] = 2 * m - 1;
  rhs.linear[3 * m - 1] = 4 * m - 2;
  ProductSpec lhs({{Rational(l), l}, {Rational(2 * m), 2}, {Rational(1), -1}, {Rational(m), -1}});
  return {"class1", std::move(lhs), std::move(rhs), m};
}

IdentitySpec class2_identity(std::int64_t m) {
  check_m(m);
  const std::int64_t l = 4 * m - 1;
  LatticeSum rhs;
  rhs.dim = static_cast<std::size_t>(l);
  rhs.scale = 3 * m;
  rhs.linear.assign(rhs.dim, Rational(-1));
  for (std::int64_t i = 0; i + 1 < m; ++i) rhs.linear[i] = -3;
  rhs.linear[m - 1] = 3 * m - 2;
  rhs.linear[l - 1] = 3 * m - 1;
  ProductSpec lhs({{Rational(3 * m), 4 * m}, {Rational(2), 2}, {Rational(1), -2}, {Rational(3), -1}});
  return {"class2", std::move(lhs), std::move(rhs), m};
}

VerifyReport verify_identity(const IdentitySpec& spec, const Rational& bound, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  spec.rhs.validate();
  QSeries product = product_series(spec.lhs, bound);
  QSeries theta = lattice_sum_series(spec.rhs, bound, threads);
  VerifyReport report = series_compare(product, theta);
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qsi
