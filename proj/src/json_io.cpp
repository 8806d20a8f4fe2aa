#include "qsi/json_io.hpp"

#include <stdexcept>

namespace qsi {

namespace {

// Accepts "p/q" strings and plain JSON integers.
Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Integer integer_field(const Json& j) {
  Rational r = rational_field(j);
  if (r.get_den() != 1) throw std::invalid_argument("expected an integer, got " + j.dump());
  return r.get_num();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"denom", s.denom()}, {"lo", s.lo()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const Json& j) {
  const auto denom = member(j, "denom").get<std::int64_t>();
  const auto lo = member(j, "lo").get<std::int64_t>();
  const auto order = member(j, "order").get<std::int64_t>();
  const Json& cs = member(j, "coeffs");
  if (!cs.is_array() || order < lo || cs.size() != static_cast<std::size_t>(order - lo + 1))
    throw std::invalid_argument("coeffs must cover lo..order exactly");
  std::vector<Integer> coeffs;
  for (const auto& c : cs) coeffs.push_back(integer_field(c));
  return QSeries::from_coeffs(denom, lo, std::move(coeffs), order);
}

Json to_json(const LatticeSum& s) {
  Json lin = Json::array();
  for (const auto& v : s.linear) lin.push_back(to_string(v));
  return Json{{"l", s.dim},
              {"c", to_string(s.scale)},
              {"lin", std::move(lin)},
              {"const", to_string(s.offset)},
              {"weight", std::string(to_string(s.weight))}};
}

LatticeSum lattice_sum_from_json(const Json& j) {
  LatticeSum s;
  s.dim = member(j, "l").get<std::size_t>();
  s.scale = rational_field(member(j, "c"));
  for (const auto& v : member(j, "lin")) s.linear.push_back(rational_field(v));
  s.offset = j.contains("const") ? rational_field(j.at("const")) : Rational(0);
  if (j.contains("weight")) s.weight = parse_weight_shape(j.at("weight").get<std::string>());
  s.validate();
  return s;
}

Json to_json(const ProductSpec& p) {
  Json out = Json::array();
  for (const auto& f : p.factors()) out.push_back(Json{{"scale", to_string(f.scale)}, {"power", f.power}});
  return out;
}

ProductSpec product_spec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("product spec must be an array of {scale, power}");
  std::vector<PhiFactor> factors;
  for (const auto& f : j) factors.push_back({rational_field(member(f, "scale")), member(f, "power").get<long>()});
  return ProductSpec(std::move(factors));
}

Json to_json(const IdentitySpec& spec) {
  Json out{{"name", spec.name}, {"lhs", to_json(spec.lhs)}, {"rhs", to_json(spec.rhs)}};
  out["m"] = spec.m ? Json(*spec.m) : Json(nullptr);
  return out;
}

IdentitySpec identity_from_json(const Json& j) {
  IdentitySpec spec;
  spec.name = member(j, "name").get<std::string>();
  spec.lhs = product_spec_from_json(member(j, "lhs"));
  spec.rhs = lattice_sum_from_json(member(j, "rhs"));
  if (j.contains("m") && !j.at("m").is_null()) spec.m = j.at("m").get<std::int64_t>();
  return spec;
}

Json to_json(const VerifyReport& r, bool with_timing) {
  Json out{{"match", r.match}, {"checked_through", to_string(r.checked_through)}};
  if (r.first_mismatch)
    out["first_mismatch"] = Json{{"exponent", to_string(r.first_mismatch->exponent)},
                                 {"lhs_coeff", r.first_mismatch->lhs_coeff.get_str()},
                                 {"rhs_coeff", r.first_mismatch->rhs_coeff.get_str()}};
  else
    out["first_mismatch"] = nullptr;
  out["lhs_shift"] = to_string(r.lhs_shift);
  out["rhs_shift"] = to_string(r.rhs_shift);
  if (with_timing) out["wall_time_ms"] = r.wall_time_ms;
  return out;
}

VerifyReport report_from_json(const Json& j) {
  VerifyReport r;
  r.match = member(j, "match").get<bool>();
  r.checked_through = rational_field(member(j, "checked_through"));
  if (j.contains("first_mismatch") && !j.at("first_mismatch").is_null()) {
    const Json& m = j.at("first_mismatch");
    r.first_mismatch = Mismatch{rational_field(member(m, "exponent")), integer_field(member(m, "lhs_coeff")),
                                integer_field(member(m, "rhs_coeff"))};
  }
  r.lhs_shift = rational_field(member(j, "lhs_shift"));
  r.rhs_shift = rational_field(member(j, "rhs_shift"));
  if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  if (r.match == r.first_mismatch.has_value()) throw std::invalid_argument("match flag disagrees with first_mismatch");
  return r;
}

}  // namespace qsi
