#include "qsi/quadform.hpp"

#include "qsi/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsi {

namespace {

void check_dim(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                                std::to_string(got));
}

// Gram matrix of the exponent's quadratic part: k^T A k = scale * kappa(k).
std::vector<std::vector<Rational>> gram(const LatticeSum& s) {
  std::vector<std::vector<Rational>> a(s.dim, std::vector<Rational>(s.dim));
  for (std::size_t i = 0; i < s.dim; ++i) {
    a[i][i] = s.scale;
    if (i + 1 < s.dim) a[i][i + 1] = a[i + 1][i] = -s.scale / 2;
  }
  return a;
}

// Solves m x = rhs for symmetric positive definite m (Gaussian elimination).
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

// exponent(k) = minimum + sum_j pivot[j] * (k_j - center_j)^2, where
// center_j = shift[j] - sum_{i<j} coupling[j][i] * (k_i - shift[i]) only
// depends on earlier coordinates. This is a U D U^T factorization of the
// Gram matrix taken from the last coordinate, so k_1 is the outermost loop.
struct Completion {
  std::size_t dim = 0;
  Rational minimum;
  std::vector<Rational> shift;
  std::vector<Rational> pivot;
  std::vector<std::vector<Rational>> coupling;

  explicit Completion(const LatticeSum& s) : dim(s.dim), pivot(s.dim), coupling(s.dim) {
    auto a = gram(s);
    std::vector<std::vector<Rational>> u(dim, std::vector<Rational>(dim));
    for (std::size_t j = dim; j-- > 0;) {
      Rational dj = a[j][j];
      for (std::size_t m = j + 1; m < dim; ++m) dj -= u[j][m] * u[j][m] * pivot[m];
      if (dj <= 0) throw std::invalid_argument("indefinite exponent function");
      pivot[j] = dj;
      for (std::size_t i = 0; i < j; ++i) {
        Rational v = a[i][j];
        for (std::size_t m = j + 1; m < dim; ++m) v -= u[i][m] * u[j][m] * pivot[m];
        u[i][j] = v / dj;
      }
    }
    for (std::size_t j = 0; j < dim; ++j) {
      coupling[j].resize(j);
      for (std::size_t i = 0; i < j; ++i) coupling[j][i] = u[i][j];
    }
    // Real minimizer of k^T A k + lin.k: 2 A x = -lin.
    std::vector<Rational> rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) rhs[i] = -s.linear[i];
    for (auto& row : a)
      for (auto& v : row) v *= 2;
    shift = solve(a, rhs);
    minimum = s.offset;
    for (std::size_t i = 0; i < dim; ++i) minimum += s.linear[i] * shift[i] / 2;
  }

  void center(std::size_t j, std::span<const std::int64_t> k, Rational& out, Rational& tmp) const {
    out = shift[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (coupling[j][i] == 0) continue;
      tmp = k[i];
      tmp -= shift[i];
      tmp *= coupling[j][i];
      out -= tmp;
    }
  }
};

// Walks every point with exponent <= bound. Levels 0..dim-2 are expanded
// here; the last coordinate is handed to `leaf` as an integer window together
// with the accumulated partial exponent, its pivot and its center, so callers
// can process a whole row at once.
template <class Leaf>
class Walker {
 public:
  Walker(const Completion& c, const Rational& bound, Leaf& leaf)
      : c_(c), bound_(bound), leaf_(leaf), k_(c.dim), partial_(c.dim + 1), center_(c.dim) {}

  IntegerWindow outer_window() {
    partial_[0] = c_.minimum;
    return window(0);
  }

  void run() { descend(0, outer_window()); }

  void run(std::int64_t lo, std::int64_t hi) {
    IntegerWindow w = outer_window();
    w.lo = std::max(w.lo, lo);
    w.hi = std::min(w.hi, hi);
    descend(0, w);
  }

 private:
  IntegerWindow window(std::size_t j) {
    c_.center(j, k_, center_[j], tmp_);
    rem_ = bound_ - partial_[j];
    if (rem_ < 0) return {};
    rem_ /= c_.pivot[j];
    return integer_window(center_[j], rem_);
  }

  void descend(std::size_t j, IntegerWindow w) {
    if (w.empty()) return;
    if (j + 1 == c_.dim) {
      leaf_(k_, w, partial_[j], c_.pivot[j], center_[j]);
      return;
    }
    for (std::int64_t x = w.lo; x <= w.hi; ++x) {
      k_[j] = x;
      tmp_ = x;
      tmp_ -= center_[j];
      tmp_ *= tmp_;
      tmp_ *= c_.pivot[j];
      partial_[j + 1] = partial_[j] + tmp_;
      descend(j + 1, window(j + 1));
    }
  }

  const Completion& c_;
  Rational bound_;
  Leaf& leaf_;
  std::vector<std::int64_t> k_;
  std::vector<Rational> partial_;
  std::vector<Rational> center_;
  Rational rem_, tmp_;
};

Rational leaf_value(std::int64_t x, const Rational& partial, const Rational& pivot, const Rational& center) {
  Rational t = x - center;
  return partial + pivot * t * t;
}

std::int64_t weight_of_sum(WeightShape w, std::int64_t s) {
  switch (w) {
    case WeightShape::unit:
      return 1;
    case WeightShape::alternating:
      return (s % 2 == 0) ? 1 : -1;
    case WeightShape::jacobi:
      return 4 * s + 1;
  }
  return 1;
}

}  // namespace

Integer KappaForm::operator()(std::span<const std::int64_t> k) const {
  check_dim(dim_, k.size());
  Integer v = 0, t;
  for (std::size_t i = 0; i < k.size(); ++i) {
    t = k[i];
    v += t * t;
    if (i + 1 < k.size()) {
      t *= k[i + 1];
      v -= t;
    }
  }
  return v;
}

Rational KappaForm::operator()(std::span<const Rational> x) const {
  check_dim(dim_, x.size());
  Rational v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    v += x[i] * x[i];
    if (i + 1 < x.size()) v -= x[i] * x[i + 1];
  }
  return v;
}

Rational CartanForm::operator()(std::span<const Rational> x, std::span<const Rational> y) const {
  check_dim(dim_, x.size());
  check_dim(dim_, y.size());
  Rational v = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    v += 2 * x[i] * y[i];
    if (i + 1 < dim_) v -= x[i] * y[i + 1] + x[i + 1] * y[i];
  }
  return v;
}

std::string_view to_string(WeightShape w) {
  switch (w) {
    case WeightShape::unit:
      return "unit";
    case WeightShape::alternating:
      return "alternating";
    case WeightShape::jacobi:
      return "jacobi";
  }
  return "unit";
}

WeightShape parse_weight_shape(std::string_view name) {
  if (name == "unit") return WeightShape::unit;
  if (name == "alternating") return WeightShape::alternating;
  if (name == "jacobi") return WeightShape::jacobi;
  throw std::invalid_argument("unknown weight shape '" + std::string(name) + "'");
}

void LatticeSum::validate() const {
  if (scale <= 0) throw std::invalid_argument("indefinite exponent function");
  check_dim(dim, linear.size());
}

Rational LatticeSum::exponent(std::span<const std::int64_t> k) const {
  check_dim(dim, k.size());
  Rational e = scale * Rational(KappaForm(dim)(k)) + offset;
  for (std::size_t i = 0; i < dim; ++i) e += linear[i] * k[i];
  return e;
}

std::int64_t LatticeSum::weight_at(std::span<const std::int64_t> k) const {
  std::int64_t s = 0;
  for (auto v : k) s += v;
  return weight_of_sum(weight, s);
}

IntegerWindow integer_window(const Rational& center, const Rational& radius_sq) {
  if (radius_sq < 0) return {};
  auto fits = [&](std::int64_t x) {
    Rational t = x - center;
    return t * t <= radius_sq;
  };
  const std::int64_t nearest = to_int64(round_of(center));
  if (!fits(nearest)) return {};
  const double c = center.get_d();
  const double r = std::sqrt(radius_sq.get_d());
  std::int64_t lo = std::min(nearest, static_cast<std::int64_t>(std::floor(c - r)));
  std::int64_t hi = std::max(nearest, static_cast<std::int64_t>(std::ceil(c + r)));
  while (!fits(lo)) ++lo;
  while (fits(lo - 1)) --lo;
  while (!fits(hi)) --hi;
  while (fits(hi + 1)) ++hi;
  return {lo, hi};
}

std::vector<LatticePoint> lattice_enumerate(const LatticeSum& sum, const Rational& bound) {
  sum.validate();
  std::vector<LatticePoint> out;
  if (sum.dim == 0) {
    if (sum.offset <= bound) out.push_back({{}, sum.offset});
    return out;
  }
  Completion c(sum);
  auto leaf = [&](std::vector<std::int64_t>& k, IntegerWindow w, const Rational& partial, const Rational& pivot,
                  const Rational& center) {
    for (std::int64_t x = w.lo; x <= w.hi; ++x) {
      k.back() = x;
      out.push_back({k, leaf_value(x, partial, pivot, center)});
    }
  };
  Walker<decltype(leaf)> walker(c, bound, leaf);
  walker.run();
  return out;
}

std::vector<LatticePoint> lattice_enumerate_oracle(const LatticeSum& sum, const Rational& bound) {
  sum.validate();
  std::vector<LatticePoint> out;
  if (sum.dim == 0) {
    if (sum.offset <= bound) out.push_back({{}, sum.offset});
    return out;
  }
  // Real minimizer x of the exponent from 2 scale G x = -lin, G the Gram
  // matrix of kappa, by plain Gaussian elimination. Then
  // exponent(k) - min >= scale mu |k - x|^2 bounds every coordinate.
  const std::size_t l = sum.dim;
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l + 1));
  for (std::size_t i = 0; i < l; ++i) {
    m[i][i] = 2 * sum.scale;
    if (i > 0) m[i][i - 1] = -sum.scale;
    if (i + 1 < l) m[i][i + 1] = -sum.scale;
    m[i][l] = -sum.linear[i];
  }
  for (std::size_t c = 0; c < l; ++c)
    for (std::size_t r = c + 1; r < l; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= l; ++j) m[r][j] -= f * m[c][j];
    }
  std::vector<Rational> x(l);
  for (std::size_t i = l; i-- > 0;) {
    Rational acc = m[i][l];
    for (std::size_t j = i + 1; j < l; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  Rational minimum = sum.offset;
  for (std::size_t i = 0; i < l; ++i) minimum += sum.linear[i] * x[i] / 2;
  if (bound < minimum) return out;
  const Rational radius_sq = (bound - minimum) / (sum.scale * kappa_min_eigenvalue_bound(l));
  std::vector<IntegerWindow> box(l);
  for (std::size_t i = 0; i < l; ++i) {
    box[i] = integer_window(x[i], radius_sq);
    if (box[i].empty()) return out;
  }

  // Scan with integer exponents on the grid 1/D.
  std::int64_t d = lcm64(denominator64(sum.scale), denominator64(sum.offset));
  for (const auto& v : sum.linear) d = lcm64(d, denominator64(v));
  const Rational grid = d;
  const std::int64_t scale = to_int64(Rational(sum.scale * grid).get_num());
  const std::int64_t offset = to_int64(Rational(sum.offset * grid).get_num());
  std::vector<std::int64_t> lin;
  for (const auto& v : sum.linear) lin.push_back(to_int64(Rational(v * grid).get_num()));
  const std::int64_t limit = to_int64(floor_of(bound * grid));

  std::vector<std::int64_t> k(l);
  for (std::size_t i = 0; i < l; ++i) k[i] = box[i].lo;
  while (true) {
    std::int64_t kap = 0, dot = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      kap += k[i] * k[i] - (i + 1 < k.size() ? k[i] * k[i + 1] : 0);
      dot += lin[i] * k[i];
    }
    const std::int64_t e = scale * kap + dot + offset;
    if (e <= limit) out.push_back({k, ratio(e, d)});
    std::size_t i = sum.dim;
    while (i-- > 0) {
      if (k[i] < box[i].hi) {
        ++k[i];
        break;
      }
      k[i] = box[i].lo;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

Rational kappa_min_eigenvalue_bound(std::size_t dim) {
  // 1 - cos(pi/(dim+1)) = 2 sin^2(x), x = pi/(2(dim+1)). With pi >= 3141/1000
  // and sin(x) >= x - x^3/6 (increasing for x < sqrt 2) this is a lower bound.
  const Rational x = ratio(3141, 2000 * static_cast<long>(dim + 1));
  Rational s = x - x * x * x / 6;
  return 2 * s * s;
}

Rational lattice_minimum(const LatticeSum& sum) {
  sum.validate();
  if (sum.dim == 0) return sum.offset;
  Completion c(sum);
  // Nearest-plane rounding gives an attained value to bound the search.
  std::vector<std::int64_t> k(sum.dim);
  Rational center, tmp;
  for (std::size_t j = 0; j < sum.dim; ++j) {
    c.center(j, k, center, tmp);
    k[j] = to_int64(round_of(center));
  }
  Rational best = sum.exponent(k);
  auto leaf = [&](std::vector<std::int64_t>&, IntegerWindow w, const Rational& partial, const Rational& pivot,
                  const Rational& ctr) {
    std::int64_t x = std::clamp(to_int64(round_of(ctr)), w.lo, w.hi);
    Rational v = leaf_value(x, partial, pivot, ctr);
    if (v < best) best = v;
  };
  Walker<decltype(leaf)> walker(c, best, leaf);
  walker.run();
  return best;
}

QSeries lattice_sum_series(const LatticeSum& sum, const Rational& bound, unsigned threads) {
  sum.validate();
  std::int64_t denom = lcm64(denominator64(sum.scale), denominator64(sum.offset));
  for (const auto& v : sum.linear) denom = lcm64(denom, denominator64(v));
  const std::int64_t order = to_int64(floor_of(bound * denom));

  if (sum.dim == 0) {
    return QSeries::from_coeffs(denom, to_int64(Rational(sum.offset * denom).get_num()), {Integer(1)}, order);
  }
  Completion c(sum);
  const std::int64_t base = to_int64(ceil_of(c.minimum * denom));
  if (order < base) return QSeries::zero(denom, order);
  const std::size_t len = static_cast<std::size_t>(order - base + 1);

  // A row of the last coordinate has exponents with constant second
  // difference, so grid indices follow an integer recurrence along the row.
  auto make_leaf = [&](std::vector<std::int64_t>& counts) {
    return [&counts, &sum, denom, base](std::vector<std::int64_t>& k, IntegerWindow w, const Rational& partial,
                                        const Rational& pivot, const Rational& center) {
      auto as_index = [](const Rational& v) {
        if (v.get_den() != 1) throw std::logic_error("lattice exponent off the series grid");
        return to_int64(v.get_num());
      };
      std::int64_t idx = as_index(leaf_value(w.lo, partial, pivot, center) * denom);
      std::int64_t step = as_index(pivot * (2 * (w.lo - center) + 1) * denom);
      const std::int64_t accel = as_index(2 * pivot * denom);
      std::int64_t prefix = 0;
      for (std::size_t i = 0; i + 1 < k.size(); ++i) prefix += k[i];
      for (std::int64_t x = w.lo; x <= w.hi; ++x) {
        counts[static_cast<std::size_t>(idx - base)] += weight_of_sum(sum.weight, prefix + x);
        idx += step;
        step += accel;
      }
    };
  };

  std::vector<std::int64_t> total(len, 0);
  if (threads <= 1 || sum.dim < 2) {
    auto leaf = make_leaf(total);
    Walker<decltype(leaf)> walker(c, bound, leaf);
    walker.run();
  } else {
    std::vector<std::vector<std::int64_t>> per_worker(threads, std::vector<std::int64_t>(len, 0));
    IntegerWindow outer;
    {
      auto probe = make_leaf(total);
      Walker<decltype(probe)> walker(c, bound, probe);
      outer = walker.outer_window();
    }
    const std::size_t tasks = outer.empty() ? 0 : static_cast<std::size_t>(outer.hi - outer.lo + 1);
    parallel_tasks(tasks, threads, [&](std::size_t t, unsigned w) {
      auto leaf = make_leaf(per_worker[w]);
      Walker<decltype(leaf)> walker(c, bound, leaf);
      std::int64_t x = outer.lo + static_cast<std::int64_t>(t);
      walker.run(x, x);
    });
    for (const auto& part : per_worker)
      for (std::size_t i = 0; i < len; ++i) total[i] += part[i];
  }

  std::vector<Integer> coeffs(len);
  for (std::size_t i = 0; i < len; ++i) coeffs[i] = Integer(static_cast<long>(total[i]));
  return QSeries::from_coeffs(denom, base, std::move(coeffs), order);
}

}  // namespace qsi
