#include "polyspace/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace polyspace {

namespace {

void require_nonempty(const GeneticCode& code) {
  if (code.is_empty_space()) throw std::invalid_argument("cohomology of the empty space requested");
}

void require_degree(const GeneticCode& code, int d, int lowest) {
  if (d < lowest || d > code.n - 3) {
    throw std::invalid_argument("degree " + std::to_string(d) + " outside [" + std::to_string(lowest) +
                                ", " + std::to_string(code.n - 3) + "]");
  }
}

Gf2Matrix disjointness_matrix(const std::vector<IndexSet>& rows, const std::vector<IndexSet>& columns) {
  Gf2Matrix m(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if ((rows[r].mask() & columns[c].mask()) == 0) m.set(r, c);
    }
  }
  return m;
}

}  // namespace

Presentation build_presentation(const GeneticCode& code, int d) {
  require_nonempty(code);
  require_degree(code, d, 0);
  const auto subgees = subgee_table(code).flattened();
  Presentation p;
  p.degree = d;
  const int min_row_size = code.n - 2 - d;
  for (const auto& s : subgees) {
    if (s.size() <= d) p.columns.push_back(s);
    if (s.size() >= min_row_size) p.row_sets.push_back(s);
  }
  p.matrix = disjointness_matrix(p.row_sets, p.columns);
  return p;
}

bool r_power_is_zero(const GeneticCode& code, int d) {
  require_nonempty(code);
  require_degree(code, d, 1);
  const auto p = build_presentation(code, d);
  Gf2Matrix stacked = p.matrix;
  stacked.add_unit_row(0);
  return gf2_rank(stacked) == gf2_rank(p.matrix);
}

std::size_t dim_cohomology(const GeneticCode& code, int d) {
  const auto p = build_presentation(code, d);
  return p.columns.size() - gf2_rank(p.matrix);
}

bool rank_trick_zero(const GeneticCode& code, RankTrickLevel level) {
  require_nonempty(code);
  if (level == RankTrickLevel::Subtop && code.n < 5) {
    throw std::invalid_argument("subtop rank criterion needs n >= 5");
  }
  if (code.n < 4) throw std::invalid_argument("rank criteria need n >= 4");
  const auto columns = subgee_table(code).flattened();
  const int min_row_size = level == RankTrickLevel::Top ? 1 : 2;
  std::vector<IndexSet> rows;
  for (const auto& s : columns) {
    if (s.size() >= min_row_size) rows.push_back(s);
  }
  const auto reduced = disjointness_matrix(rows, columns).without_column(0);
  const auto rank = gf2_rank(reduced);
  if (level == RankTrickLevel::Top) return rank < reduced.width();
  return rank + 1 == rows.size();
}

}  // namespace polyspace
