#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyspace/catalog.hpp"
#include "polyspace/gale.hpp"
#include "polyspace/invariants.hpp"

namespace polyspace {

struct SevenGonStatistics {
  int n = 0;
  std::size_t catalog_size = 0;
  std::size_t null_cobordant = 0;
  std::size_t cobordant_to_rp = 0;
  std::size_t r3_nonzero = 0;
  std::vector<GeneticCode> r3_zero_codes;
  std::vector<GeneticCode> euler_zero_codes;
  GeneticCode worked_example;
  std::vector<std::size_t> worked_example_d;
};

struct ParallelFixture {
  GeneticCode code;
  Parallelizable expected = Parallelizable::Unknown;
};

/// Published values the library is checked against, loaded from the
/// bundled fixtures file.
struct PublishedValues {
  std::map<int, std::size_t> census;
  SevenGonStatistics seven_gon;
  int r2_min_n = 0;
  int r2_max_n = 0;
  std::vector<ParallelFixture> parallel;
  /// Every code with one of these n is parallelizable.
  std::vector<int> all_parallelizable_n;
  /// For these n, every code not listed in `parallel` is not parallelizable.
  std::vector<int> otherwise_not_parallelizable_n;
};

const PublishedValues& published_values();
std::string_view published_values_json();

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool pass() const;
};

/// Census count against the published table. Throws std::invalid_argument
/// if n has no published count.
CheckReport check_census(int n, std::size_t count);

/// Cobordism split, R^3 statistics, Euler-zero list and the worked d-vector.
/// Throws std::invalid_argument unless `catalog` is the complete catalog
/// for the fixture's n.
CheckReport check_seven_gon_statistics(const std::vector<CatalogEntry>& catalog);

/// The codes with R^2 = 0 must be exactly the torus, Klein and special codes.
CheckReport check_r2(int n, const std::vector<CatalogEntry>& catalog);

/// Parallelizability verdicts over the listed codes and, where the fixtures
/// give a blanket rule for n, over every code of `catalog`.
CheckReport check_parallelizability(const std::vector<CatalogEntry>& catalog);

}  // namespace polyspace
