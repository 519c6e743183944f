#include "polyspace_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "polyspace/catalog.hpp"
#include "polyspace/identities.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/lengths.hpp"
#include "polyspace/published_checks.hpp"
#include "polyspace/realize.hpp"

namespace polyspace::cli {

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("POLYSPACE_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string join_ints(const auto& values, const char* sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << sep;
    s << v;
    first = false;
  }
  return s.str();
}

void print_report(std::ostream& out, const InvariantReport& r) {
  out << "d: " << join_ints(r.d) << '\n';
  out << "orientable: " << (r.orientable ? "yes" : "no") << '\n';
  out << "cobordism: ";
  if (r.cobordism.kind == Cobordism::NullCobordant) {
    out << "null cobordant\n";
  } else {
    out << "cobordant to RP^" << r.cobordism.rp_dimension;
    if (r.cobordism.rp_is_boundary) out << " (itself a boundary)";
    out << '\n';
  }
  out << "euler characteristic: " << r.euler << '\n';
  out << "alternating subgee sum: " << r.alternating_subgee_sum << '\n';
  out << "nonzero vector field: " << (r.has_vector_field ? "yes" : "no") << '\n';
  out << "stiefel-whitney (1+R)^" << r.n - 2 << " nonzero degrees: " << join_ints(r.sw_nonzero_degrees) << '\n';
  out << "R = 0: " << (r.r_vanishes ? "yes" : "no") << '\n';
  out << "immersion: ";
  if (!r.immersion) {
    out << "no statement\n";
  } else if (r.immersion->obstructed) {
    out << "does not immerse in R^" << r.immersion->euclidean_dimension << " (R^" << r.immersion->r_degree
        << " != 0)\n";
  } else {
    out << "not ruled out in R^" << r.immersion->euclidean_dimension << " (R^" << r.immersion->r_degree
        << " = 0)\n";
  }
  out << "parallelizable: " << to_string(r.parallelizable) << '\n';
}

int emit_entry(std::ostream& out, const CatalogEntry& entry, bool json) {
  if (json) {
    out << to_json_line(entry) << '\n';
    return kExitOk;
  }
  out << "code: " << format_code(entry.code) << '\n';
  out << "witness: " << format_lengths(entry.witness) << '\n';
  if (entry.code.is_empty_space()) {
    out << "space: empty\n";
  } else {
    if (const auto family = classify_family(entry.code)) out << "family: " << family_name(*family) << '\n';
    print_report(out, *entry.report);
  }
  return kExitOk;
}

int analyze_lengths(const std::string& text, bool json, std::ostream& out, std::ostream& err) {
  const auto lengths = parse_lengths(text);
  if (!is_generic(lengths)) {
    err << "error: lengths " << format_lengths(lengths) << " are not generic\n";
    return kExitFailure;
  }
  const auto code = derive_genetic_code(lengths);
  CatalogEntry entry{code, lengths, std::nullopt};
  if (!code.is_empty_space()) entry.report = make_report(code);
  if (!json) out << "generic: yes\n";
  return emit_entry(out, entry, json);
}

int analyze_code(const std::string& text, bool json, std::ostream& out, std::ostream& err) {
  const auto code = parse_code(text);
  const auto witness = is_realizable(code);
  if (!witness) {
    err << "error: " << format_code(code) << " is not realizable";
    if (const auto conflict = glem_conflict(code)) {
      err << " (" << format_gee(conflict->first) << " and " << format_gee(conflict->second)
          << " cannot both be subgees)";
    }
    err << '\n';
    return kExitFailure;
  }
  CatalogEntry entry{code, *witness, std::nullopt};
  if (!code.is_empty_space()) entry.report = make_report(code);
  return emit_entry(out, entry, json);
}

std::vector<CatalogEntry> enumerate_logged(int n, EnumerateOptions options, std::ostream& err) {
  std::size_t last_decile = 0;
  if (n >= kMaxEnumerateN) options.progress = [&](std::size_t done, std::size_t total) {
    const std::size_t decile = done * 10 / total;
    if (decile > last_decile) {
      last_decile = decile;
      err << "n=" << n << ": " << done << "/" << total << " subtrees\n";
    }
  };
  const auto start = std::chrono::steady_clock::now();
  auto entries = enumerate_codes(n, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "n=" << n << ": " << entries.size() << " codes in " << seconds << " s\n";
  return entries;
}

int print_checks(const CheckReport& report, std::ostream& out) {
  for (const auto& item : report.items) {
    out << item.name << ": " << item.detail << ": " << (item.pass ? "PASS" : "FAIL") << '\n';
  }
  return report.pass() ? kExitOk : kExitFailure;
}

struct Flags {
  std::string lengths;
  std::string code;
  bool json = false;
  int n = 0;
  std::string out_path;
  unsigned jobs = 1;
  bool with_reports = false;
  bool allow_long = false;
  std::string checkpoint;
  std::string paper;
  std::string catalog;
  std::int64_t max_m = 20;
  std::int64_t max_k = 20;
  bool wz = false;
};

int identities(const Flags& f, std::ostream& out) {
  struct Line {
    std::string name;
    GridReport report;
  };
  std::vector<Line> lines;
  lines.push_back({"comblem+combcor2", check_comblem_grid(f.max_m, f.max_k)});
  lines.push_back({"combthm", check_combthm_grid(f.max_m, f.max_k, 10)});
  lines.push_back({"combcor", check_combcor_grid(f.max_m)});
  if (f.wz) lines.push_back({"wz", check_wz_grid(f.max_m, f.max_k)});
  bool ok = true;
  for (const auto& line : lines) {
    out << line.name << ": " << line.report.checked << " cases, " << line.report.failures.size() << " failures: "
        << (line.report.ok() ? "PASS" : "FAIL") << '\n';
    for (const auto& fail : line.report.failures) {
      out << "  " << fail.identity << " m=" << fail.args.m << " k=" << fail.args.k << " d=" << fail.args.d << '\n';
    }
    ok = ok && line.report.ok();
  }
  return ok ? kExitOk : kExitFailure;
}

int verify(const Flags& f, std::ostream& out, std::ostream& err) {
  EnumerateOptions options;
  options.jobs = f.jobs;
  options.allow_long = f.allow_long;
  auto catalog_for = [&](int n) {
    if (!f.catalog.empty()) return read_catalog_file(f.catalog);
    return enumerate_logged(n, options, err);
  };
  if (f.paper == "table1") {
    if (f.n == 0) throw CLI::ValidationError("--n", "verify --paper table1 needs --n");
    const std::size_t count = f.catalog.empty() ? census(f.n, options) : read_catalog_file(f.catalog).size();
    const auto report = check_census(f.n, count);
    out << count << " codes: " << (report.pass() ? "PASS" : "FAIL") << '\n';
    return report.pass() ? kExitOk : kExitFailure;
  }
  if (f.paper == "section3") {
    return print_checks(check_seven_gon_statistics(catalog_for(published_values().seven_gon.n)), out);
  }
  if (f.paper == "r2thm") {
    if (f.n == 0) throw CLI::ValidationError("--n", "verify --paper r2thm needs --n");
    return print_checks(check_r2(f.n, catalog_for(f.n)), out);
  }
  if (f.paper == "parallel") {
    std::vector<CatalogEntry> all;
    for (int n : {6, 8}) {
      auto c = enumerate_logged(n, options, err);
      all.insert(all.end(), c.begin(), c.end());
    }
    return print_checks(check_parallelizability(all), out);
  }
  throw CLI::ValidationError("--paper", "unknown check " + f.paper);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and census of planar polygon spaces", "polyspace"};
  app.require_subcommand(1);
  Flags f;
  f.jobs = default_jobs();

  auto* analyze = app.add_subcommand("analyze", "Analyze a length vector or a genetic code");
  auto* lengths_opt = analyze->add_option("--lengths", f.lengths, "Comma-separated side lengths, e.g. 1,2,2,3/2");
  auto* code_opt = analyze->add_option("--code", f.code, "Genetic code, e.g. 7:[421|51]");
  lengths_opt->excludes(code_opt);
  analyze->add_flag("--json", f.json, "Print one catalog-format JSON line");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every genetic code for n-gons");
  enumerate->add_option("--n", f.n, "Number of sides")->required()->check(CLI::Range(kMinEnumerateN, kMaxEnumerateN));
  enumerate->add_option("--out", f.out_path, "Catalog file (default: standard output)");
  enumerate->add_option("--jobs", f.jobs, "Worker threads, 0 for all cores (default $POLYSPACE_JOBS or 1)");
  enumerate->add_flag("--with-reports", f.with_reports, "Attach the invariant report to each entry");
  enumerate->add_flag("--allow-long", f.allow_long, "Permit n = 9");
  enumerate->add_option("--checkpoint", f.checkpoint, "Resume file for long runs");

  auto* verify_cmd = app.add_subcommand("verify", "Check computed values against published ones");
  verify_cmd->add_option("--paper", f.paper, "table1 | section3 | r2thm | parallel")
      ->required()
      ->check(CLI::IsMember({"table1", "section3", "r2thm", "parallel"}));
  verify_cmd->add_option("--n", f.n, "Number of sides")->check(CLI::Range(kMinEnumerateN, kMaxEnumerateN));
  verify_cmd->add_option("--catalog", f.catalog, "Use this catalog instead of enumerating");
  verify_cmd->add_option("--jobs", f.jobs, "Worker threads for enumeration");
  verify_cmd->add_flag("--allow-long", f.allow_long, "Permit n = 9");

  auto* identities_cmd = app.add_subcommand("identities", "Verify the binomial identities on integer grids");
  identities_cmd->add_option("--max-m", f.max_m, "Largest |m|")->check(CLI::Range(0, 200));
  identities_cmd->add_option("--max-k", f.max_k, "Largest k")->check(CLI::Range(0, 200));
  identities_cmd->add_flag("--wz", f.wz, "Also check the WZ certificate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (analyze->parsed() && f.lengths.empty() && f.code.empty()) {
      throw CLI::RequiredError("--lengths or --code");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      return f.lengths.empty() ? analyze_code(f.code, f.json, out, err) : analyze_lengths(f.lengths, f.json, out, err);
    }
    if (enumerate->parsed()) {
      EnumerateOptions options;
      options.jobs = f.jobs;
      options.allow_long = f.allow_long;
      options.with_reports = f.with_reports;
      options.checkpoint_path = f.checkpoint;
      const auto entries = enumerate_logged(f.n, options, err);
      if (f.out_path.empty()) {
        write_catalog(out, entries);
      } else {
        write_catalog_file(f.out_path, entries);
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) return verify(f, out, err);
    return identities(f, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonGenericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace polyspace::cli
