#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// coeffs · x > 0 (Strict) or coeffs · x >= 0 (Weak).
enum class Relation { Strict, Weak };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::Strict;
};

/// A homogeneous system of linear inequalities in `variables` unknowns.
/// With `nonnegative` set, solutions are additionally restricted to x >= 0.
struct LinearSystem {
  int variables = 0;
  std::vector<LinearConstraint> constraints;
  bool nonnegative = false;
};

/// Optimum of: maximize t subject to strict rows >= t, weak rows >= 0,
/// sum |x_i| = 1 and 0 <= t <= 1. The system is strictly feasible iff
/// `feasible` (t > 0). All arithmetic is exact.
struct MaxSlackResult {
  bool feasible = false;
  Rational slack;
  /// The optimal point; all coordinates share the denominator `denominator`
  /// and `numerators[i] / denominator == point[i]`.
  std::vector<Rational> point;
  std::vector<BigInt> numerators;
  BigInt denominator = 1;
};

MaxSlackResult max_slack(const LinearSystem& system);

/// Integer-coefficient fast path used by the enumerator. Pivots run on a
/// fraction-free int64 tableau and redo the solve in GMP integers if an
/// intermediate value would overflow.
struct IntegerConstraint {
  std::vector<std::int64_t> coeffs;
  Relation relation = Relation::Strict;
};

MaxSlackResult max_slack(int variables, std::span<const IntegerConstraint> constraints, bool nonnegative);

/// A point satisfying every constraint of `system` (strict ones strictly),
/// or nothing if none exists.
std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& system);

/// Exact evaluation of a constraint at a point.
bool satisfies(const LinearConstraint& constraint, std::span<const Rational> point);

}  // namespace polyspace
