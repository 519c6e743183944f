#pragma once

#include <optional>

#include "polyspace/gale.hpp"
#include "polyspace/lengths.hpp"
#include "polyspace/lp.hpp"

namespace polyspace {

/// Row over (l_1..l_n) that is positive iff T+{n} is short (want_short) or
/// long (!want_short). Strict.
IntegerConstraint shortness_row(int n, const IndexSet& t, bool want_short);

/// The realization system of a canonical code over sorted lengths:
/// l_1 > 0, l_{i+1} >= l_i, each gee G has G+{n} short, each minimal
/// non-subgee H has H+{n} long. For the empty space only {n} long is
/// required.
LinearSystem realization_system(const GeneticCode& code);

/// A generic length vector (primitive integers, ascending) whose code is
/// `code`, or nothing if no length vector has this code. Throws
/// InternalError if the found witness does not reproduce the code.
std::optional<LengthVector> is_realizable(const GeneticCode& code);

}  // namespace polyspace
