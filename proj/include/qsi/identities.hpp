#pragma once

// Series-product identities: the classical one-variable specializations of
// the denominator identity and two infinite families in 4m-1 variables, each
// a product of phi factors on one side and a lattice theta sum on the other.

#include "qsi/qseries.hpp"
#include "qsi/quadform.hpp"
#include "qsi/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsi {

struct IdentitySpec {
  std::string name;
  ProductSpec lhs;
  LatticeSum rhs;
  std::optional<std::int64_t> m;

  friend bool operator==(const IdentitySpec&, const IdentitySpec&) = default;
};

/// euler, jacobi, gauss_a, gauss_b.
const std::vector<std::string>& classical_identity_names();

/// Throws std::invalid_argument for an unknown name.
IdentitySpec classical_identity(std::string_view name);

/// phi(q^{4m-1})^{4m-1} phi(q^{2m})^2 / (phi(q) phi(q^m)) against
/// sum q^{(4m-1) kappa(k) + lin(k)} over Z^{4m-1}, with
/// lin = (2m-1)k_1 - k_2 - ... - k_{3m-1} + (4m-2)k_{3m} - k_{3m+1} - ... - k_{4m-1}.
IdentitySpec class1_identity(std::int64_t m);

/// phi(q^{3m})^{4m} phi(q^2)^2 / (phi(q)^2 phi(q^3)) against
/// sum q^{3m kappa(k) + lin(k)} over Z^{4m-1}, with
/// lin = -3k_1 - ... - 3k_{m-1} + (3m-2)k_m - k_{m+1} - ... - k_{4m-2} + (3m-1)k_{4m-1}.
IdentitySpec class2_identity(std::int64_t m);

/// Expands both sides through `bound` and compares them after normalization.
/// A mismatch is reported, not thrown.
VerifyReport verify_identity(const IdentitySpec& spec, const Rational& bound, unsigned threads = 0);

}  // namespace qsi
