#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyspace/catalog.hpp"
#include "polyspace/cohomology.hpp"
#include "polyspace/identities.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/published_checks.hpp"

using namespace polyspace;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runtime limits, in seconds.
constexpr double kSmallCensusLimit = 10.0;
constexpr double kN8CensusLimit = 600.0;
constexpr double kIdentityLimit = 30.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + note);
  }
};

std::set<int> failed;

void report(int number, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << number << "  " << title << '\n';
  for (const auto& note : o.notes) std::cout << "        " << note << '\n';
  std::cout.flush();
  if (!o.pass) failed.insert(number);
}

void add_check_report(Outcome& o, const CheckReport& r) {
  for (const auto& item : r.items) o.require(item.pass, item.name + ": " + item.detail);
}

bool skip_n9() {
  const char* env = std::getenv("POLYSPACE_SKIP_N9");
  return env != nullptr && std::string(env) != "0" && std::string(env) != "";
}

std::map<int, std::vector<CatalogEntry>> catalogs;
std::map<int, double> timings;

void build_catalogs() {
  for (int n = kMinEnumerateN; n <= kMaxEnumerateN; ++n) {
    if (n == kMaxEnumerateN && skip_n9()) continue;
    EnumerateOptions options;
    options.jobs = 0;
    options.allow_long = true;
    const auto start = Clock::now();
    catalogs[n] = enumerate_codes(n, options);
    timings[n] = seconds_since(start);
  }
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << " s";
  return out.str();
}

Outcome census_criterion() {
  Outcome o;
  double small = 0;
  for (int n = kMinEnumerateN; n <= 7; ++n) small += timings.at(n);
  for (const auto& [n, entries] : catalogs) {
    if (n < 6) continue;
    add_check_report(o, check_census(n, entries.size()));
  }
  o.require(small < kSmallCensusLimit, "n <= 7 in " + fmt_seconds(small) + " (limit " + fmt_seconds(kSmallCensusLimit) + ")");
  o.require(timings.at(8) < kN8CensusLimit,
            "n = 8 in " + fmt_seconds(timings.at(8)) + " (limit " + fmt_seconds(kN8CensusLimit) + ")");
  if (catalogs.count(9) != 0) {
    o.notes.push_back("     n = 9 in " + fmt_seconds(timings.at(9)));
  } else {
    o.notes.push_back("     n = 9 skipped (POLYSPACE_SKIP_N9)");
  }
  return o;
}

CheckReport statistics_report() { return check_seven_gon_statistics(catalogs.at(published_values().seven_gon.n)); }

Outcome select_items(const CheckReport& r, const std::vector<std::string>& prefixes) {
  Outcome o;
  for (const auto& item : r.items) {
    for (const auto& p : prefixes) {
      if (item.name.rfind(p, 0) == 0) {
        o.require(item.pass, item.name + ": " + item.detail);
        break;
      }
    }
  }
  return o;
}

Outcome r2_criterion() {
  Outcome o;
  const auto& f = published_values();
  for (int n = f.r2_min_n; n <= f.r2_max_n; ++n) add_check_report(o, check_r2(n, catalogs.at(n)));
  return o;
}

Outcome monogenic_criterion() {
  Outcome o;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  for (int n = kMinEnumerateN; n <= 8; ++n) {
    for (const auto& e : catalogs.at(n)) {
      if (!e.code.is_monogenic()) continue;
      ++checked;
      if (monogenic_top_power(e.code) == r_power_is_zero(e.code, n - 3)) mismatches.push_back(format_code(e.code));
    }
  }
  std::string note = std::to_string(checked) + " monogenic codes, " + std::to_string(mismatches.size()) + " mismatches";
  for (const auto& m : mismatches) note += " " + m;
  o.require(mismatches.empty() && checked > 0, note);
  return o;
}

Outcome rank_trick_criterion() {
  Outcome o;
  std::size_t checked = 0;
  std::vector<std::string> top_bad;
  std::vector<std::string> subtop_bad;
  std::vector<std::string> dim_bad;
  for (int n = kMinEnumerateN; n <= 8; ++n) {
    for (const auto& e : catalogs.at(n)) {
      ++checked;
      if (rank_trick_zero(e.code, RankTrickLevel::Top) != r_power_is_zero(e.code, n - 3)) {
        top_bad.push_back(format_code(e.code));
      }
      if (n >= 5 && rank_trick_zero(e.code, RankTrickLevel::Subtop) != r_power_is_zero(e.code, n - 4)) {
        subtop_bad.push_back(format_code(e.code));
      }
      if (dim_cohomology(e.code, n - 3) != 1) dim_bad.push_back(format_code(e.code));
    }
  }
  auto line = [&](const std::string& what, const std::vector<std::string>& bad) {
    std::string note = what + ": " + std::to_string(checked) + " codes, " + std::to_string(bad.size()) + " mismatches";
    for (std::size_t i = 0; i < bad.size() && i < 10; ++i) note += " " + bad[i];
    o.require(bad.empty(), note);
  };
  line("top rank criterion vs stacked rank", top_bad);
  line("subtop rank criterion vs stacked rank", subtop_bad);
  line("dim H^{n-3} = 1", dim_bad);
  return o;
}

Outcome identity_criterion() {
  Outcome o;
  const auto start = Clock::now();
  auto grid = [&](const std::string& name, const GridReport& r) {
    std::string note = name + ": " + std::to_string(r.checked) + " cases, " + std::to_string(r.failures.size()) +
                       " failures";
    o.require(r.ok() && r.checked > 0, note);
  };
  grid("comblem and combcor2, |m| <= 20, k <= 20", check_comblem_grid(20, 20));
  grid("combthm, |m| <= 10, k <= 12, excess <= 10", check_combthm_grid(10, 12, 10));
  grid("combcor, 0 <= k <= m <= 24", check_combcor_grid(24));
  grid("wz certificate, |m| <= 20, k <= 20", check_wz_grid(20, 20));

  bool degenerate_seen = false;
  bool degenerate_ok = true;
  for (std::int64_t k = 0; k <= 20; ++k) {
    const auto c = wz_certificate_check(k + 1, k);
    degenerate_seen = degenerate_seen || c.degenerate;
    degenerate_ok = degenerate_ok && c.degenerate && c.ok();
  }
  o.require(degenerate_seen && degenerate_ok, "wz degenerate case k - m + 1 = 0 for k <= 20");
  bool boundary_ok = true;
  for (std::int64_t m = -20; m <= 20; ++m) {
    for (std::int64_t k = 0; k <= 20; ++k) boundary_ok = boundary_ok && wz_certificate(m, k, 0) == 0;
  }
  o.require(boundary_ok, "G(k, 0) = 0 on the grid");
  const double elapsed = seconds_since(start);
  o.require(elapsed < kIdentityLimit, "elapsed " + fmt_seconds(elapsed) + " (limit " + fmt_seconds(kIdentityLimit) + ")");
  return o;
}

Outcome round_trip_criterion() {
  Outcome o;
  for (const auto& [n, entries] : catalogs) {
    // The subset-enumerating oracles are exponential; n = 9 uses the library.
    const bool use_oracle = n <= 8;
    std::size_t bad = 0;
    for (const auto& e : entries) {
      bool ok = is_generic(e.witness) && derive_genetic_code(e.witness) == e.code;
      if (use_oracle) {
        const auto& sides = e.witness.values();
        ok = ok && oracle::is_generic(sides);
        const auto masks = oracle::gee_masks(sides);
        ok = ok && std::vector<std::uint64_t>(masks.begin(), masks.end()) == oracle::code_key(e.code);
      }
      ok = ok && parse_json_line(to_json_line(e)).code == e.code;
      if (!ok) ++bad;
    }
    o.require(bad == 0, "n = " + std::to_string(n) + ": " + std::to_string(entries.size()) + " entries, " +
                            std::to_string(bad) + " failures" + (use_oracle ? " (oracle checked)" : ""));
  }
  return o;
}

Outcome parallel_criterion() {
  Outcome o;
  std::vector<CatalogEntry> all = catalogs.at(6);
  all.insert(all.end(), catalogs.at(8).begin(), catalogs.at(8).end());
  add_check_report(o, check_parallelizability(all));

  // n = 10 cannot be enumerated; check the family codes and codes of
  // random integer length vectors instead.
  std::vector<GeneticCode> tens{family_code(Family::Torus, 10), family_code(Family::Klein, 10),
                                family_code(Family::Special, 10)};
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> side(1, 60);
  while (tens.size() < 200) {
    std::vector<Rational> v;
    for (int i = 0; i < 10; ++i) v.emplace_back(side(rng));
    LengthVector lengths(v);
    if (!is_generic(lengths)) continue;
    const auto code = derive_genetic_code(lengths);
    if (!code.is_empty_space()) tens.push_back(code);
  }
  std::size_t wrong = 0;
  for (const auto& c : tens) wrong += parallelizability(c) == Parallelizable::Yes ? 0 : 1;
  o.require(wrong == 0, "n = 10: " + std::to_string(tens.size()) + " codes, " + std::to_string(wrong) + " not Yes");
  return o;
}

}  // namespace

// --known-failures=2,3 makes the exit status succeed when exactly those
// criteria fail; the FAIL lines are printed either way.
std::set<int> parse_known(int argc, char** argv) {
  std::set<int> known;
  const std::string flag = "--known-failures=";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind(flag, 0) != 0) {
      std::cerr << "unknown argument " << arg << '\n';
      std::exit(2);
    }
    std::istringstream list(arg.substr(flag.size()));
    for (std::string item; std::getline(list, item, ',');) known.insert(std::stoi(item));
  }
  return known;
}

int main(int argc, char** argv) {
  const auto known = parse_known(argc, argv);
  const auto start = Clock::now();
  build_catalogs();
  const auto s3 = statistics_report();

  report(1, "census", census_criterion());
  report(2, "n = 7 cobordism split", select_items(s3, {"null cobordant", "cobordant to RP^"}));
  report(3, "n = 7 R^3 statistics", select_items(s3, {"R^3"}));
  report(4, "n = 7 Euler characteristic list and worked d-vector", select_items(s3, {"Euler", "d-vector"}));
  report(5, "R^2 = 0 codes", r2_criterion());
  report(6, "monogenic top power vs matrix", monogenic_criterion());
  report(7, "rank criteria and top dimension", rank_trick_criterion());
  report(8, "binomial identities", identity_criterion());
  report(9, "witness round trip", round_trip_criterion());
  report(10, "parallelizability", parallel_criterion());

  std::cout << (10 - failed.size()) << "/10 criteria passed in " << fmt_seconds(seconds_since(start)) << '\n';
  if (!known.empty()) {
    std::cout << "known failures:";
    for (int k : known) std::cout << ' ' << k;
    std::cout << (failed == known ? " (matched)" : " (did not match)") << '\n';
    return failed == known ? EXIT_SUCCESS : EXIT_FAILURE;
  }
  return failed.empty() ? EXIT_SUCCESS : EXIT_FAILURE;
}
