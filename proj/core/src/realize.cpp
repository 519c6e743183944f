#include "polyspace/realize.hpp"

#include <vector>

namespace polyspace {

IntegerConstraint shortness_row(int n, const IndexSet& t, bool want_short) {
  IntegerConstraint row;
  row.relation = Relation::Strict;
  row.coeffs.assign(static_cast<std::size_t>(n), 0);
  const IndexSet with_n = t.with(n);
  for (int i = 1; i <= n; ++i) {
    const bool in = with_n.contains(i);
    // short: rest - (T+n) > 0; long: (T+n) - rest > 0
    row.coeffs[static_cast<std::size_t>(i - 1)] = (in != want_short) ? 1 : -1;
  }
  return row;
}

namespace {

std::vector<IntegerConstraint> realization_rows(const GeneticCode& code) {
  const int n = code.n;
  std::vector<IntegerConstraint> rows;
  IntegerConstraint positive;
  positive.coeffs.assign(static_cast<std::size_t>(n), 0);
  positive.coeffs[0] = 1;
  rows.push_back(positive);
  for (int i = 1; i < n; ++i) {
    IntegerConstraint order;
    order.relation = Relation::Weak;
    order.coeffs.assign(static_cast<std::size_t>(n), 0);
    order.coeffs[static_cast<std::size_t>(i)] = 1;
    order.coeffs[static_cast<std::size_t>(i - 1)] = -1;
    rows.push_back(std::move(order));
  }
  if (code.is_empty_space()) {
    rows.push_back(shortness_row(n, IndexSet{}, false));
    return rows;
  }
  for (const auto& g : code.gees) rows.push_back(shortness_row(n, g, true));
  for (const auto& h : minimal_non_subgees(code)) rows.push_back(shortness_row(n, h, false));
  return rows;
}

}  // namespace

LinearSystem realization_system(const GeneticCode& code) {
  LinearSystem system;
  system.variables = code.n;
  system.nonnegative = true;
  for (const auto& row : realization_rows(code)) {
    LinearConstraint c;
    c.relation = row.relation;
    for (auto v : row.coeffs) c.coeffs.emplace_back(static_cast<long>(v));
    system.constraints.push_back(std::move(c));
  }
  return system;
}

std::optional<LengthVector> is_realizable(const GeneticCode& code) {
  if (glem_conflict(code)) return std::nullopt;
  const auto rows = realization_rows(code);
  const auto result = max_slack(code.n, rows, true);
  if (!result.feasible) return std::nullopt;
  std::vector<Rational> sides;
  for (const auto& num : result.numerators) sides.emplace_back(num);
  LengthVector witness(std::move(sides));
  // integer_sides() strips the common factor.
  std::vector<Rational> primitive;
  for (const auto& v : witness.integer_sides()) primitive.emplace_back(v);
  LengthVector reduced(std::move(primitive));
  if (derive_genetic_code(reduced) != code) {
    throw InternalError("realization witness " + format_lengths(reduced) + " does not reproduce " +
                        format_code(code));
  }
  return reduced;
}

}  // namespace polyspace
