#include "qsi/affine.hpp"
#include "qsi/json_io.hpp"

#include <doctest.h>

using namespace qsi;

TEST_CASE("series round trip") {
  auto s = product_series(ProductSpec({{ratio(1, 3), -2}, {2, 5}}), 12).shifted(ratio(-7, 6));
  auto j = to_json(s);
  CHECK(j["denom"] == s.denom());
  CHECK(qseries_from_json(Json::parse(j.dump())) == s);

  auto big = power(inverse(phi_series(1, 200)), 24);
  CHECK(qseries_from_json(to_json(big)) == big);
}

TEST_CASE("identity round trip") {
  for (auto spec : {classical_identity("jacobi"), class1_identity(2), class2_identity(3)})
    CHECK(identity_from_json(Json::parse(to_json(spec).dump())) == spec);
  auto j = to_json(class1_identity(1));
  CHECK(j["rhs"]["c"] == "3");
  CHECK(j["rhs"]["weight"] == "unit");
  CHECK(j["m"] == 1);
  CHECK(to_json(classical_identity("euler"))["m"].is_null());
}

TEST_CASE("report round trip") {
  auto ok = verify_proposition(Partition({1, 3}), 3, 20);
  auto j = to_json(ok);
  CHECK_FALSE(j.contains("wall_time_ms"));
  CHECK(j["first_mismatch"].is_null());
  auto back = report_from_json(j);
  CHECK(back.match);
  CHECK(back.lhs_shift == ok.lhs_shift);
  CHECK(back.rhs_shift == ok.rhs_shift);
  CHECK(back.checked_through == ok.checked_through);

  auto bad = series_compare(QSeries::from_coeffs(1, 0, {1, 1}, 5), QSeries::from_coeffs(1, 0, {1, 2}, 5));
  auto jb = to_json(bad, true);
  CHECK(jb.contains("wall_time_ms"));
  auto rb = report_from_json(jb);
  REQUIRE(rb.first_mismatch);
  CHECK(rb.first_mismatch->exponent == 1);
  CHECK(rb.first_mismatch->rhs_coeff == 2);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(qseries_from_json(Json{{"denom", 1}, {"lo", 0}, {"order", 3}, {"coeffs", {"1"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(product_spec_from_json(Json::parse(R"([{"scale":"0","power":1}])")), std::invalid_argument);
  CHECK_THROWS_AS(lattice_sum_from_json(Json::parse(R"({"l":1,"c":"-1","lin":["0"]})")), std::invalid_argument);
}
