#include "qsi/affine.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsi {

namespace {

void check_weight_index(const Partition& p, std::int64_t k) {
  if (k < 0 || k >= p.n())
    throw std::invalid_argument("weight index " + std::to_string(k) + " outside 0.." + std::to_string(p.n() - 1));
}

void collect_partitions(std::int64_t remaining, std::int64_t min_part, std::vector<std::int64_t>& cur,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::int64_t part = min_part; part <= remaining; ++part) {
    cur.push_back(part);
    collect_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

// Rows of the constrained sum. With k_r eliminated, fixing k_1..k_{j-1}
// leaves R = k - sum of them for the remaining blocks, and
//   min over reals of sum_{i>=j} k_i^2/n_i  subject to  sum_{i>=j} k_i = R
// is R^2 / (n_j + ... + n_r). Each level is therefore a convex quadratic in
// k_j whose sublevel set bounds the recursion exactly at the last free level.
class ConstrainedWalker {
 public:
  using Row = std::function<void(const std::vector<std::int64_t>&, IntegerWindow, const Rational&,
                                 const Rational&, const Rational&)>;

  ConstrainedWalker(const PartitionData& d, std::int64_t k, const Rational& bound, Row row)
      : parts_(d.partition.parts()),
        k_(k),
        half_(ratio(d.modulus, 2)),
        limit_(bound / half_),
        tail_(parts_.size() + 1, 0),
        prefix_(parts_.size() - 1),
        row_(std::move(row)) {
    for (std::size_t i = parts_.size(); i-- > 0;) tail_[i] = tail_[i + 1] + parts_[i];
  }

  void run() { descend(0, k_, Rational(0)); }

 private:
  void descend(std::size_t j, std::int64_t rest, const Rational& partial) {
    const std::int64_t nj = parts_[j];
    const Rational vertex = ratio(Integer(rest) * nj, tail_[j]);
    const Rational at_vertex = partial + ratio(Integer(rest) * rest, tail_[j]);
    const Rational curvature = ratio(tail_[j], nj * tail_[j + 1]);
    const IntegerWindow w = integer_window(vertex, (limit_ - at_vertex) / curvature);
    if (w.empty()) return;
    if (j + 2 == parts_.size()) {
      row_(prefix_, w, half_ * at_vertex, half_ * curvature, vertex);
      return;
    }
    for (std::int64_t x = w.lo; x <= w.hi; ++x) {
      prefix_[j] = x;
      descend(j + 1, rest - x, partial + ratio(Integer(x) * x, nj));
    }
  }

  const std::vector<std::int64_t>& parts_;
  std::int64_t k_;
  Rational half_;
  Rational limit_;
  std::vector<std::int64_t> tail_;
  std::vector<std::int64_t> prefix_;
  Row row_;
};

Rational row_value(std::int64_t x, const Rational& partial, const Rational& pivot, const Rational& center) {
  Rational t = x - center;
  return partial + pivot * t * t;
}

Rational single_block_exponent(const PartitionData& d, std::int64_t k) {
  return ratio(Integer(d.modulus) * k * k, 2 * d.partition.parts()[0]);
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty partition");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] < parts_[i - 1]) throw std::invalid_argument("partition parts must be ascending");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::int64_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<Partition> partitions_of(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  collect_partitions(n, 1, cur, out);
  return out;
}

std::int64_t compute_modulus(const Partition& p) {
  std::int64_t base = 1;
  for (auto part : p.parts()) base = std::lcm(base, part);
  for (auto a : p.parts()) {
    for (auto b : p.parts()) {
      // N'(1/a + 1/b) = N'/a + N'/b, both integers.
      if ((base / a + base / b) % 2 != 0) return 2 * base;
    }
  }
  return base;
}

std::vector<std::int64_t> compute_specialization(const Partition& p, std::int64_t modulus) {
  const auto& parts = p.parts();
  const Integer N = modulus;
  std::vector<Rational> s;
  s.push_back(ratio(N * (parts.front() + parts.back()), 2 * parts.front() * parts.back()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::int64_t j = 1; j < parts[i]; ++j) s.push_back(ratio(N, parts[i]));
    if (i + 1 < parts.size()) {
      const std::int64_t a = parts[i], b = parts[i + 1];
      s.push_back(N * (ratio(a + b, 2 * a * b) - 1));
    }
  }
  std::vector<std::int64_t> out;
  std::int64_t total = 0;
  for (auto& v : s) {
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::logic_error("non-integral specialization entry " + qsi::to_string(v) + " for partition " +
                             p.to_string());
    out.push_back(to_int64(v.get_num()));
    total += out.back();
  }
  if (total != modulus) throw std::logic_error("specialization does not sum to N for partition " + p.to_string());
  return out;
}

PartitionData::PartitionData(Partition p)
    : partition(std::move(p)),
      n(partition.n()),
      modulus(compute_modulus(partition)),
      s(compute_specialization(partition, modulus)) {}

std::vector<Rational> fundamental_weight_coeffs(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0 || k >= n)
    throw std::invalid_argument("fundamental weight index " + std::to_string(k) + " outside 0.." +
                                std::to_string(n - 1));
  std::vector<Rational> c;
  for (std::int64_t i = 1; i < n; ++i) {
    c.push_back(ratio(std::min(i, k) * (n - std::max(i, k)), n));
  }
  return c;
}

SpecializedCharacter specialized_character(const Partition& p, std::int64_t k) {
  check_weight_index(p, k);
  PartitionData data(p);
  WeightConfig weight(data.n, k);
  const std::size_t dim = static_cast<std::size_t>(data.n - 1);
  const CartanForm form(dim);
  const Rational N = data.modulus;
  const auto& c = weight.coeffs;

  // E(k) = (N/2)(k+c | k+c) - s.(k+c)
  //      = N kappa(k) + sum_j (N (e_j|c) - s_j) k_j + (N/2)(c|c) - s.c
  LatticeSum num;
  num.dim = dim;
  num.scale = N;
  num.linear.resize(dim);
  num.offset = N * form(c, c) / 2;
  std::vector<Rational> unit(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    unit.assign(dim, Rational(0));
    unit[j] = 1;
    const Rational sj = data.s[j + 1];
    num.linear[j] = N * form(unit, c) - sj;
    num.offset -= sj * c[j];
  }
  ProductSpec den({{N, data.n - 1}});
  return {std::move(data), std::move(weight), std::move(num), std::move(den)};
}

QSeries specialized_character_series(const Partition& p, std::int64_t k, const Rational& window, unsigned threads) {
  if (window < 0) throw std::invalid_argument("truncation order must be non-negative");
  SpecializedCharacter sc = specialized_character(p, k);
  const Rational lead = lattice_minimum(sc.numerator);
  QSeries num = lattice_sum_series(sc.numerator, lead + window, threads);
  std::vector<PhiFactor> inv;
  for (const auto& f : sc.denominator.factors()) inv.push_back({f.scale, -f.power});
  QSeries den_inv = product_series(ProductSpec(std::move(inv)), window);
  return (num * den_inv).truncated(lead + window);
}

std::vector<ConstrainedPoint> constrained_enumerate(const PartitionData& d, std::int64_t k, const Rational& bound) {
  std::vector<ConstrainedPoint> out;
  if (d.partition.blocks() == 1) {
    Rational e = single_block_exponent(d, k);
    if (e <= bound) out.push_back({{k}, e});
    return out;
  }
  ConstrainedWalker walker(d, k, bound,
                           [&](const std::vector<std::int64_t>& prefix, IntegerWindow w, const Rational& partial,
                               const Rational& pivot, const Rational& center) {
                             std::int64_t used = std::accumulate(prefix.begin(), prefix.end() - 1, std::int64_t{0});
                             for (std::int64_t x = w.lo; x <= w.hi; ++x) {
                               std::vector<std::int64_t> pt(prefix.begin(), prefix.end() - 1);
                               pt.push_back(x);
                               pt.push_back(k - used - x);
                               out.push_back({std::move(pt), row_value(x, partial, pivot, center)});
                             }
                           });
  walker.run();
  return out;
}

Rational constrained_minimum(const PartitionData& d, std::int64_t k) {
  if (d.partition.blocks() == 1) return single_block_exponent(d, k);
  // Round each block toward its share k n_i / n of the remainder for an
  // attained starting value, then search below it.
  const auto& parts = d.partition.parts();
  std::int64_t rest = k, tail = d.n;
  Rational value = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::int64_t x = to_int64(round_of(ratio(Integer(rest) * parts[i], tail)));
    value += ratio(Integer(x) * x, parts[i]);
    rest -= x;
    tail -= parts[i];
  }
  value += ratio(Integer(rest) * rest, parts.back());
  Rational best = ratio(d.modulus, 2) * value;
  ConstrainedWalker walker(d, k, best,
                           [&](const std::vector<std::int64_t>&, IntegerWindow w, const Rational& partial,
                               const Rational& pivot, const Rational& center) {
                             std::int64_t x = std::clamp(to_int64(round_of(center)), w.lo, w.hi);
                             Rational v = row_value(x, partial, pivot, center);
                             if (v < best) best = v;
                           });
  walker.run();
  return best;
}

QSeries constrained_sum_series(const PartitionData& d, std::int64_t k, const Rational& bound) {
  std::int64_t denom = 1;
  for (auto part : d.partition.parts()) denom = lcm64(denom, denominator64(ratio(d.modulus, 2 * part)));
  const std::int64_t order = to_int64(floor_of(bound * denom));
  if (d.partition.blocks() == 1) {
    Rational e = single_block_exponent(d, k) * denom;
    return QSeries::from_coeffs(denom, to_int64(e.get_num()), {Integer(1)}, order);
  }
  const std::int64_t base = to_int64(ceil_of(constrained_minimum(d, k) * denom));
  if (order < base) return QSeries::zero(denom, order);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(order - base + 1), 0);
  auto as_index = [](const Rational& v) {
    if (v.get_den() != 1) throw std::logic_error("constrained exponent off the series grid");
    return to_int64(v.get_num());
  };
  ConstrainedWalker walker(d, k, bound,
                           [&](const std::vector<std::int64_t>&, IntegerWindow w, const Rational& partial,
                               const Rational& pivot, const Rational& center) {
                             std::int64_t idx = as_index(row_value(w.lo, partial, pivot, center) * denom);
                             std::int64_t step = as_index(pivot * (2 * (w.lo - center) + 1) * denom);
                             const std::int64_t accel = as_index(2 * pivot * denom);
                             for (std::int64_t x = w.lo; x <= w.hi; ++x) {
                               ++counts[static_cast<std::size_t>(idx - base)];
                               idx += step;
                               step += accel;
                             }
                           });
  walker.run();
  std::vector<Integer> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Integer(static_cast<long>(counts[i]));
  return QSeries::from_coeffs(denom, base, std::move(coeffs), order);
}

QSeries trace_series(const Partition& p, std::int64_t k, const Rational& window) {
  check_weight_index(p, k);
  if (window < 0) throw std::invalid_argument("truncation order must be non-negative");
  PartitionData d(p);
  const Rational lead = constrained_minimum(d, k);
  QSeries num = constrained_sum_series(d, k, lead + window);
  std::vector<PhiFactor> factors{{Rational(d.modulus), 1}};
  for (auto part : p.parts()) factors.push_back({ratio(d.modulus, part), -1});
  QSeries quotient = product_series(ProductSpec(std::move(factors)), window);
  return (num * quotient).truncated(lead + window);
}

VerifyReport verify_proposition(const Partition& p, std::int64_t k, const Rational& window, unsigned threads) {
  check_weight_index(p, k);
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  if (threads > 1) {
    auto trace = std::async(std::launch::async, [&] { return trace_series(p, k, window); });
    QSeries character = specialized_character_series(p, k, window, threads);
    report = series_compare(character, trace.get());
  } else {
    report = series_compare(specialized_character_series(p, k, window), trace_series(p, k, window));
  }
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qsi
