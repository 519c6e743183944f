#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

enum class Identity {
  /// sum_i C(m-i,i) C(i-m+k,k-i) is unchanged by k -> k+2.
  Comblem,
  /// that sum is 1 for even k and 0 for odd k.
  Combcor2,
  /// for d >= k-m: sum_i C(m-i,i) C(i+d,k-i) = sum_j C(m+d-1-2j, k-2j).
  Combthm,
  /// for m >= k >= 0: sum_i C(m-i,i) C(i,k-i) = C(m+1,k) mod 2.
  Combcor,
};

std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct IdentityArgs {
  std::int64_t m = 0;
  std::int64_t k = 0;
  /// Used by Combthm only.
  std::int64_t d = 0;
};

struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// Evaluates both sides exactly. Throws std::invalid_argument when the
/// arguments violate the identity's hypotheses.
IdentitySides evaluate_identity(Identity id, const IdentityArgs& args);
bool identity_check(Identity id, const IdentityArgs& args);

/// sum_{i=0}^{k} C(m-i,i) C(i-m+k, k-i)
BigInt comblem_sum(std::int64_t m, std::int64_t k);

/// f(k,i) = C(m-i,i) C(i-m+k,k-i)
Rational wz_term(std::int64_t m, std::int64_t k, std::int64_t i);
/// G(k,i) = f(k,i) (2k-m+3)(i-m-1) i (2i-m) / ((k+1-i)(k+2-i)), for i <= k.
Rational wz_certificate(std::int64_t m, std::int64_t k, std::int64_t i);
/// C(m-k,k)(1 - C(2k-m+2,2)) - C(m-k-1,k+1) C(2k-m+3,1) - C(m-k-2,k+2)
Rational wz_boundary_sum(std::int64_t m, std::int64_t k);

struct WzCheck {
  bool degenerate = false;  // k - m + 1 == 0
  bool recurrence = true;   // (k+2)(k-m+1)(f(k,i) - f(k+2,i)) = G(k,i+1) - G(k,i), 0 <= i < k
  bool boundary = true;     // G(k,0) = 0
  bool closing = true;      // -(k+2)(k-m+1) S = G(k,k)
  /// Degenerate case only: both sides of the k -> k+2 recurrence agree and
  /// equal the closed form (1 for even k, 0 for odd k).
  bool degenerate_sides = true;
  std::optional<std::int64_t> failing_i;

  bool ok() const { return recurrence && boundary && closing && degenerate_sides; }
};

WzCheck wz_certificate_check(std::int64_t m, std::int64_t k);

struct GridFailure {
  std::string identity;
  IdentityArgs args;
};

struct GridReport {
  std::size_t checked = 0;
  std::vector<GridFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Comblem and Combcor2 over -max_m <= m <= max_m, 0 <= k <= max_k.
GridReport check_comblem_grid(std::int64_t max_m, std::int64_t max_k);
/// Combthm over -max_m <= m <= max_m, 0 <= k <= max_k, 0 <= d-(k-m) <= max_excess.
GridReport check_combthm_grid(std::int64_t max_m, std::int64_t max_k, std::int64_t max_excess);
/// Combcor over 0 <= k <= m <= max_m.
GridReport check_combcor_grid(std::int64_t max_m);
/// wz_certificate_check over -max_m <= m <= max_m, 0 <= k <= max_k.
GridReport check_wz_grid(std::int64_t max_m, std::int64_t max_k);

}  // namespace polyspace
