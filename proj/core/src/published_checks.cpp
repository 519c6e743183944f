#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyspace/cohomology.hpp"
#include "polyspace/published_checks.hpp"

namespace polyspace {

namespace {

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

// Compares two code sets and describes what is missing or unexpected.
CheckItem compare_sets(std::string name, const std::vector<GeneticCode>& expected,
                       const std::vector<GeneticCode>& actual) {
  std::set<std::string> want;
  std::set<std::string> got;
  for (const auto& c : expected) want.insert(format_code(c));
  for (const auto& c : actual) got.insert(format_code(c));
  std::set<std::string> missing;
  std::set<std::string> extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::inserter(missing, missing.end()));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::inserter(extra, extra.end()));
  CheckItem item{std::move(name), missing.empty() && extra.empty(), {}};
  std::ostringstream detail;
  detail << got.size() << " codes";
  if (!missing.empty()) detail << "; missing: " << join(missing);
  if (!extra.empty()) detail << "; unexpected: " << join(extra);
  item.detail = detail.str();
  return item;
}

CheckItem compare_count(std::string name, std::size_t expected, std::size_t actual) {
  return {std::move(name), expected == actual,
          std::to_string(actual) + " (expected " + std::to_string(expected) + ")"};
}

void require_complete(const std::vector<CatalogEntry>& catalog, int n) {
  const auto& census = published_values().census;
  const auto it = census.find(n);
  for (const auto& e : catalog) {
    if (e.code.n != n) throw std::invalid_argument("catalog mixes n = " + std::to_string(e.code.n) + " entries");
  }
  if (it != census.end() && catalog.size() != it->second) {
    throw std::invalid_argument("catalog for n = " + std::to_string(n) + " has " + std::to_string(catalog.size()) +
                                " entries, expected " + std::to_string(it->second));
  }
}

}  // namespace

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

CheckReport check_census(int n, std::size_t count) {
  const auto& census = published_values().census;
  const auto it = census.find(n);
  if (it == census.end()) throw std::invalid_argument("no published census for n = " + std::to_string(n));
  CheckReport r;
  r.items.push_back(compare_count("census n=" + std::to_string(n), it->second, count));
  return r;
}

CheckReport check_seven_gon_statistics(const std::vector<CatalogEntry>& catalog) {
  const auto& f = published_values().seven_gon;
  require_complete(catalog, f.n);
  if (catalog.size() != f.catalog_size) throw std::invalid_argument("incomplete catalog");

  std::size_t null_count = 0;
  std::size_t rp_count = 0;
  std::size_t r3_nonzero = 0;
  std::vector<GeneticCode> r3_zero;
  std::vector<GeneticCode> euler_zero;
  for (const auto& e : catalog) {
    const auto cob = cobordism_class(e.code);
    (cob.kind == Cobordism::NullCobordant ? null_count : rp_count) += 1;
    if (r_power_is_zero(e.code, 3)) {
      r3_zero.push_back(e.code);
    } else {
      ++r3_nonzero;
    }
    if (euler_and_vector_field(e.code).euler == 0) euler_zero.push_back(e.code);
  }

  CheckReport r;
  r.items.push_back(compare_count("null cobordant", f.null_cobordant, null_count));
  r.items.push_back(compare_count("cobordant to RP^" + std::to_string(f.n - 3), f.cobordant_to_rp, rp_count));
  r.items.push_back(compare_count("R^3 != 0", f.r3_nonzero, r3_nonzero));
  r.items.push_back(compare_sets("R^3 = 0 list", f.r3_zero_codes, r3_zero));
  r.items.push_back(compare_sets("Euler characteristic 0 list", f.euler_zero_codes, euler_zero));

  const auto d = subgee_table(f.worked_example).d;
  std::string shown;
  for (auto x : d) shown += (shown.empty() ? "" : ",") + std::to_string(x);
  r.items.push_back({"d-vector of " + format_code(f.worked_example), d == f.worked_example_d, "(" + shown + ")"});
  return r;
}

CheckReport check_r2(int n, const std::vector<CatalogEntry>& catalog) {
  const auto& f = published_values();
  if (n < f.r2_min_n || n > f.r2_max_n) {
    throw std::invalid_argument("R^2 check covers " + std::to_string(f.r2_min_n) + " <= n <= " +
                                std::to_string(f.r2_max_n));
  }
  require_complete(catalog, n);
  std::vector<GeneticCode> zero;
  for (const auto& e : catalog) {
    if (r_power_is_zero(e.code, 2)) zero.push_back(e.code);
  }
  const std::vector<GeneticCode> expected{family_code(Family::Torus, n), family_code(Family::Klein, n),
                                          family_code(Family::Special, n)};
  CheckReport r;
  r.items.push_back(compare_sets("R^2 = 0 codes for n=" + std::to_string(n), expected, zero));
  return r;
}

CheckReport check_parallelizability(const std::vector<CatalogEntry>& catalog) {
  const auto& f = published_values();
  CheckReport r;
  for (const auto& p : f.parallel) {
    const auto got = parallelizability(p.code);
    r.items.push_back({format_code(p.code), got == p.expected,
                       std::string(to_string(got)) + " (expected " + std::string(to_string(p.expected)) + ")"});
  }
  auto contains = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  std::map<int, std::pair<std::size_t, std::vector<std::string>>> blanket;
  for (const auto& e : catalog) {
    const int n = e.code.n;
    Parallelizable want;
    if (contains(f.all_parallelizable_n, n)) {
      want = Parallelizable::Yes;
    } else if (contains(f.otherwise_not_parallelizable_n, n)) {
      const auto listed = std::find_if(f.parallel.begin(), f.parallel.end(),
                                       [&](const ParallelFixture& p) { return p.code == e.code; });
      if (listed != f.parallel.end()) continue;
      want = Parallelizable::No;
    } else {
      continue;
    }
    auto& [checked, wrong] = blanket[n];
    ++checked;
    if (parallelizability(e.code) != want) wrong.push_back(format_code(e.code));
  }
  for (const auto& [n, result] : blanket) {
    const auto& [checked, wrong] = result;
    std::string detail = std::to_string(checked) + " codes checked";
    if (!wrong.empty()) {
      detail += "; wrong verdict:";
      for (const auto& w : wrong) detail += " " + w;
    }
    r.items.push_back({"blanket rule for n=" + std::to_string(n), wrong.empty(), detail});
  }
  return r;
}

}  // namespace polyspace
