#pragma once

#include <cstddef>
#include <vector>

#include "polyspace/gale.hpp"
#include "polyspace/gf2.hpp"

namespace polyspace {

/// Degree-d relations of the mod-2 cohomology ring of a polygon space.
/// Column T is the monomial R^{d-|T|} V_T over subgees |T| <= d (column 0 is
/// T = ∅, i.e. R^d); row S is the relation for a subgee with |S| >= n-2-d and
/// has a 1 in column T iff S and T are disjoint.
struct Presentation {
  int degree = 0;
  std::vector<IndexSet> columns;
  std::vector<IndexSet> row_sets;
  Gf2Matrix matrix;
};

/// Requires a nonempty code and 0 <= d <= n-3 (std::invalid_argument).
Presentation build_presentation(const GeneticCode& code, int d);

/// R^d = 0: the unit vector on the ∅ column lies in the row space.
/// Requires 1 <= d <= n-3.
bool r_power_is_zero(const GeneticCode& code, int d);

/// dim H^d = columns - rank.
std::size_t dim_cohomology(const GeneticCode& code, int d);

enum class RankTrickLevel { Top, Subtop };

/// Direct rank criteria over all subgee columns with the R-column removed.
/// Top (degree n-3): rows are all nonempty subgees; R^{n-3} = 0 iff the
/// remaining rank is below the remaining column count.
/// Subtop (degree n-4, n >= 5): rows are subgees of size >= 2; R^{n-4} = 0
/// iff the remaining rank is one less than the row count.
bool rank_trick_zero(const GeneticCode& code, RankTrickLevel level);

}  // namespace polyspace
