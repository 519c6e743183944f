#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyspace/gale.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/lengths.hpp"

namespace polyspace {

struct CatalogEntry {
  GeneticCode code;
  /// Generic, ascending, primitive integers; derives exactly `code`.
  LengthVector witness;
  std::optional<InvariantReport> report;
};

struct EnumerateOptions {
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
  /// n = 9 takes about a minute per core and must be requested explicitly.
  bool allow_long = false;
  bool with_reports = false;
  /// When set, finished subtrees are appended here and skipped on rerun.
  std::string checkpoint_path;
  /// Called after each subtree finishes with (finished, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Smallest and largest n accepted by enumerate_codes.
inline constexpr int kMinEnumerateN = 4;
inline constexpr int kMaxEnumerateN = 9;

/// Every nonempty realizable genetic code for n-gons, each once, with a
/// witness, sorted by code_less. Throws std::invalid_argument for n outside
/// [4, 9] or n = 9 without allow_long.
std::vector<CatalogEntry> enumerate_codes(int n, const EnumerateOptions& options = {});

std::size_t census(int n, const EnumerateOptions& options = {});

/// One JSON object per line:
/// {"n":7,"gees":[[4,2,1],[5,1]],"witness":["1","2",...],"report":{...}}
std::string to_json_line(const CatalogEntry& entry);
/// Throws ParseError on malformed lines or a witness that does not derive
/// the stated code.
CatalogEntry parse_json_line(const std::string& line);

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_catalog(std::istream& in);
std::vector<CatalogEntry> read_catalog_file(const std::string& path);
void write_catalog_file(const std::string& path, const std::vector<CatalogEntry>& entries);

/// The report alone as a JSON object string.
std::string report_to_json(const InvariantReport& report);

}  // namespace polyspace
