#pragma once

#include "qsi/rational.hpp"

#include <cstdint>
#include <optional>

namespace qsi {

struct Mismatch {
  Rational exponent;
  Integer lhs_coeff;
  Integer rhs_coeff;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of comparing two series after both were normalized to start at
/// exponent 0. `checked_through` is relative to the normalized series.
struct VerifyReport {
  bool match = true;
  Rational checked_through;
  std::optional<Mismatch> first_mismatch;
  Rational lhs_shift;
  Rational rhs_shift;
  std::int64_t wall_time_ms = 0;
};

}  // namespace qsi
