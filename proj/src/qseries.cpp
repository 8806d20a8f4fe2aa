#include "qsi/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace qsi {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::pair<QSeries, QSeries> on_common_grid(const QSeries& a, const QSeries& b) {
  std::int64_t d = lcm64(a.denom(), b.denom());
  return {a.rescaled(d), b.rescaled(d)};
}

// Coefficient at grid index `idx`, which must not exceed the order.
const Integer& coeff_index(const QSeries& s, std::int64_t idx) {
  static const Integer zero(0);
  if (idx < s.lo()) return zero;
  return s.coeffs()[static_cast<std::size_t>(idx - s.lo())];
}

std::string monomial_text(const Rational& e) {
  if (e == 0) return "1";
  if (e == 1) return "q";
  if (e.get_den() == 1 && e > 0) return "q^" + to_string(e);
  return "q^(" + to_string(e) + ")";
}

}  // namespace

QSeries::QSeries() = default;

QSeries QSeries::from_coeffs(std::int64_t denom, std::int64_t lo, std::vector<Integer> coeffs,
                             std::int64_t order) {
  if (denom < 1) throw std::invalid_argument("series denominator must be positive");
  if (order < lo) return zero(denom, order);
  coeffs.resize(static_cast<std::size_t>(order - lo + 1));
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs.end()) return zero(denom, order);
  QSeries s;
  s.denom_ = denom;
  s.lo_ = lo + (first - coeffs.begin());
  s.order_ = order;
  coeffs.erase(coeffs.begin(), first);
  s.coeffs_ = std::move(coeffs);
  return s;
}

QSeries QSeries::zero(std::int64_t denom, std::int64_t order) {
  if (denom < 1) throw std::invalid_argument("series denominator must be positive");
  QSeries s;
  s.denom_ = denom;
  s.lo_ = order;
  s.order_ = order;
  return s;
}

QSeries QSeries::monomial(const Integer& c, const Rational& exponent, const Rational& order) {
  std::int64_t d = lcm64(denominator64(exponent), denominator64(order));
  std::int64_t e = to_int64(Rational(exponent * d).get_num());
  std::int64_t o = to_int64(floor_of(order * d));
  return from_coeffs(d, e, {c}, o);
}

Integer QSeries::coeff_at(const Rational& exponent) const {
  if (exponent > order_exponent())
    throw std::out_of_range("exponent " + to_string(exponent) + " beyond known order " +
                            to_string(order_exponent()));
  Rational scaled = exponent * denom_;
  if (scaled.get_den() != 1) return 0;
  return coeff_index(*this, to_int64(scaled.get_num()));
}

QSeries QSeries::rescaled(std::int64_t new_denom) const {
  if (new_denom < 1) throw std::invalid_argument("series denominator must be positive");
  if (new_denom == denom_) return *this;
  if (new_denom % denom_ == 0) {
    std::int64_t g = new_denom / denom_;
    std::int64_t new_order = order_ * g + (g - 1);
    if (is_zero()) return zero(new_denom, new_order);
    std::vector<Integer> c(static_cast<std::size_t>((order_ - lo_) * g + g));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * g] = coeffs_[i];
    return from_coeffs(new_denom, lo_ * g, std::move(c), new_order);
  }
  if (denom_ % new_denom == 0) {
    std::int64_t g = denom_ / new_denom;
    std::int64_t new_order = floor_div(order_, g);
    if (is_zero()) return zero(new_denom, new_order);
    std::vector<Integer> c;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::int64_t idx = lo_ + static_cast<std::int64_t>(i);
      if (coeffs_[i] == 0) continue;
      if (idx % g != 0) throw std::invalid_argument("series has exponents off the coarser grid");
      std::int64_t j = idx / g - lo_ / g;
      if (static_cast<std::size_t>(j) >= c.size()) c.resize(static_cast<std::size_t>(j) + 1);
      c[static_cast<std::size_t>(j)] = coeffs_[i];
    }
    return from_coeffs(new_denom, lo_ / g, std::move(c), new_order);
  }
  return rescaled(lcm64(denom_, new_denom)).rescaled(new_denom);
}

QSeries QSeries::truncated(const Rational& bound) const {
  std::int64_t d = lcm64(denom_, denominator64(bound));
  if (d != denom_) return rescaled(d).truncated(bound);
  std::int64_t o = std::min(order_, to_int64(floor_of(bound * denom_)));
  if (o == order_) return *this;
  if (is_zero() || o < lo_) return zero(denom_, o);
  std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + (o - lo_ + 1));
  return from_coeffs(denom_, lo_, std::move(c), o);
}

QSeries QSeries::shifted(const Rational& shift) const {
  std::int64_t d = lcm64(denom_, denominator64(shift));
  QSeries s = rescaled(d);
  std::int64_t k = to_int64(Rational(shift * d).get_num());
  s.lo_ += k;
  s.order_ += k;
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries operator+(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = on_common_grid(a0, b0);
  std::int64_t order = std::min(a.order(), b.order());
  std::int64_t lo = std::min(a.lo(), b.lo());
  if (order < lo) return QSeries::zero(a.denom(), order);
  std::vector<Integer> c(static_cast<std::size_t>(order - lo + 1));
  for (const QSeries* s : {&a, &b}) {
    if (s->is_zero()) continue;
    for (std::size_t i = 0; i < s->coeffs().size(); ++i) {
      std::int64_t idx = s->lo() + static_cast<std::int64_t>(i);
      if (idx > order) break;
      c[static_cast<std::size_t>(idx - lo)] += s->coeffs()[i];
    }
  }
  return QSeries::from_coeffs(a.denom(), lo, std::move(c), order);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = on_common_grid(a0, b0);
  std::int64_t order = std::min(a.order() + b.lo(), b.order() + a.lo());
  if (a.is_zero() || b.is_zero()) return QSeries::zero(a.denom(), order);
  std::int64_t lo = a.lo() + b.lo();
  const std::size_t len = static_cast<std::size_t>(order - lo + 1);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Integer> c(len);
  for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
    if (ac[i] == 0) continue;
    const std::size_t jmax = std::min(bc.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (bc[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return QSeries::from_coeffs(a.denom(), lo, std::move(c), order);
}

QSeries inverse(const QSeries& a) {
  if (a.is_zero()) throw std::domain_error("non-invertible");
  const auto& u = a.coeffs();
  const Integer& u0 = u.front();
  if (u0 != 1 && u0 != -1)
    throw std::domain_error("non-invertible over the integers: leading coefficient " + u0.get_str());
  const std::size_t len = static_cast<std::size_t>(a.order() - a.lo() + 1);
  std::vector<Integer> v(len);
  v[0] = u0;
  Integer acc;
  for (std::size_t i = 1; i < len; ++i) {
    acc = 0;
    const std::size_t jmax = std::min(i, u.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (u[j] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), u[j].get_mpz_t(), v[i - j].get_mpz_t());
    }
    v[i] = (u0 == 1) ? Integer(-acc) : acc;
  }
  std::int64_t span = a.order() - a.lo();
  return QSeries::from_coeffs(a.denom(), -a.lo(), std::move(v), -a.lo() + span);
}

QSeries power(const QSeries& a, long e) {
  if (e < 0) return power(inverse(a), -e);
  QSeries result = QSeries::from_coeffs(a.denom(), 0, {Integer(1)}, a.order() - a.lo());
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QSeries phi_series(const Rational& scale, const Rational& bound) {
  if (scale <= 0) throw std::invalid_argument("phi scale must be positive, got " + to_string(scale));
  if (bound < 0) throw std::invalid_argument("truncation order must be non-negative");
  const std::int64_t d = denominator64(scale);
  const std::int64_t step = to_int64(scale.get_num());
  const std::int64_t order = to_int64(floor_of(bound * d));
  std::vector<Integer> c(static_cast<std::size_t>(order + 1));
  c[0] = 1;
  // Multiply in (1 - q^{scale*j}) one factor at a time, in place.
  for (std::int64_t s = step; s <= order; s += step)
    for (std::int64_t i = order; i >= s; --i) c[i] -= c[i - s];
  return QSeries::from_coeffs(d, 0, std::move(c), order);
}

ProductSpec::ProductSpec(std::vector<PhiFactor> factors) {
  std::map<Rational, long> merged;
  for (const auto& f : factors) {
    if (f.scale <= 0) throw std::invalid_argument("phi scale must be positive, got " + to_string(f.scale));
    merged[f.scale] += f.power;
  }
  for (const auto& [scale, pow] : merged)
    if (pow != 0) factors_.push_back({scale, pow});
}

QSeries product_series(const ProductSpec& spec, const Rational& bound) {
  if (bound < 0) throw std::invalid_argument("truncation order must be non-negative");
  QSeries result = QSeries::one(bound);
  for (const auto& f : spec.factors()) {
    QSeries phi = phi_series(f.scale, bound);
    result = result * power(phi, f.power);
  }
  return result.truncated(bound);
}

NormalizedSeries normalize_shift(const QSeries& a) {
  if (a.is_zero()) throw std::domain_error("cannot normalize the zero series");
  return {QSeries::from_coeffs(a.denom(), 0, a.coeffs(), a.order() - a.lo()), a.lowest_exponent()};
}

VerifyReport series_compare(const QSeries& lhs, const QSeries& rhs) {
  auto normalized = [](const QSeries& s) -> NormalizedSeries {
    if (s.is_zero()) return {s, Rational(0)};
    return normalize_shift(s);
  };
  NormalizedSeries ln = normalized(lhs);
  NormalizedSeries rn = normalized(rhs);
  auto [a, b] = on_common_grid(ln.series, rn.series);

  VerifyReport report;
  report.lhs_shift = ln.shift;
  report.rhs_shift = rn.shift;
  const std::int64_t through = std::min(a.order(), b.order());
  report.checked_through = ratio(through, a.denom());
  for (std::int64_t idx = std::min(a.lo(), b.lo()); idx <= through; ++idx) {
    const Integer& x = coeff_index(a, idx);
    const Integer& y = coeff_index(b, idx);
    if (x != y) {
      report.match = false;
      report.first_mismatch = Mismatch{ratio(idx, a.denom()), x, y};
      report.first_mismatch->exponent.canonicalize();
      break;
    }
  }
  report.checked_through.canonicalize();
  return report;
}

std::string to_text(const QSeries& a) {
  std::string out;
  if (!a.is_zero()) {
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      const Integer& c = a.coeffs()[i];
      if (c == 0) continue;
      Rational e = ratio(a.lo() + static_cast<std::int64_t>(i), a.denom());
      if (out.empty())
        out += (c < 0) ? "-" : "";
      else
        out += (c < 0) ? " - " : " + ";
      Integer mag = abs(c);
      if (e == 0)
        out += mag.get_str();
      else if (mag == 1)
        out += monomial_text(e);
      else
        out += mag.get_str() + "*" + monomial_text(e);
    }
    out += " + ";
  }
  Rational next = ratio(a.order() + 1, a.denom());
  out += "O(" + monomial_text(next) + ")";
  return out;
}

}  // namespace qsi
