#pragma once

// JSON forms of the public value types. Rationals travel as "p" or "p/q"
// strings and big integers as decimal strings, so nothing is rounded.

#include "qsi/identities.hpp"
#include "qsi/qseries.hpp"
#include "qsi/quadform.hpp"
#include "qsi/report.hpp"

#include <json.hpp>

namespace qsi {

using Json = nlohmann::ordered_json;

/// {denom, lo, order, coeffs: [decimal strings]}
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {l, c, lin: [...], const, weight}
Json to_json(const LatticeSum& s);
LatticeSum lattice_sum_from_json(const Json& j);

/// [{scale, power}, ...]
Json to_json(const ProductSpec& p);
ProductSpec product_spec_from_json(const Json& j);

/// {name, lhs, rhs, m}
Json to_json(const IdentitySpec& spec);
IdentitySpec identity_from_json(const Json& j);

/// {match, checked_through, first_mismatch, lhs_shift, rhs_shift} plus
/// wall_time_ms when `with_timing` is set; without it the output only depends
/// on the inputs.
Json to_json(const VerifyReport& r, bool with_timing = false);
VerifyReport report_from_json(const Json& j);

}  // namespace qsi
