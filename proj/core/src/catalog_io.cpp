#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "json_codec.hpp"
#include "polyspace/catalog.hpp"

namespace polyspace {

namespace detail {

nlohmann::ordered_json report_json(const InvariantReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["code"] = format_code(report.code);
  j["d"] = report.d;
  j["orientable"] = report.orientable;
  nlohmann::ordered_json cob;
  cob["class"] = std::string(to_string(report.cobordism.kind));
  if (report.cobordism.kind == Cobordism::CobordantToRP) {
    cob["rp_dimension"] = report.cobordism.rp_dimension;
    cob["rp_is_boundary"] = report.cobordism.rp_is_boundary;
  }
  j["cobordism"] = cob;
  j["euler"] = report.euler;
  j["alternating_subgee_sum"] = report.alternating_subgee_sum;
  j["has_vector_field"] = report.has_vector_field;
  j["sw_nonzero_degrees"] = report.sw_nonzero_degrees;
  j["r_vanishes"] = report.r_vanishes;
  if (report.immersion) {
    j["immersion"] = {{"euclidean_dimension", report.immersion->euclidean_dimension},
                      {"r_degree", report.immersion->r_degree},
                      {"obstructed", report.immersion->obstructed}};
  } else {
    j["immersion"] = nullptr;
  }
  j["parallelizable"] = std::string(to_string(report.parallelizable));
  return j;
}

nlohmann::ordered_json entry_to_json(const CatalogEntry& entry) {
  nlohmann::ordered_json j;
  j["n"] = entry.code.n;
  auto gees = nlohmann::ordered_json::array();
  for (const auto& g : entry.code.gees) gees.push_back(g.descending());
  j["gees"] = gees;
  auto witness = nlohmann::ordered_json::array();
  for (const auto& v : entry.witness.integer_sides()) witness.push_back(v.get_str());
  j["witness"] = witness;
  if (entry.report) j["report"] = report_json(*entry.report);
  return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<IndexSet> gees;
    for (const auto& g : j.at("gees")) {
      IndexSet s;
      for (const auto& x : g) {
        const int m = x.get<int>();
        if (m < 1 || m > IndexSet::kMaxMember) throw ParseError("gee member out of range");
        s = s.with(m);
      }
      gees.push_back(s);
    }
    GeneticCode code;
    try {
      code = canonicalize(gees, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (code.gees.size() != gees.size()) throw ParseError("gee list is not an antichain");
    std::vector<Rational> sides;
    for (const auto& v : j.at("witness")) sides.push_back(parse_rational(v.get<std::string>()));
    if (static_cast<int>(sides.size()) != n) throw ParseError("witness has the wrong number of sides");
    LengthVector witness(std::move(sides));
    if (!is_generic(witness) || derive_genetic_code(witness) != code) {
      throw ParseError("witness does not realize " + format_code(code));
    }
    return CatalogEntry{std::move(code), std::move(witness), std::nullopt};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed catalog entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed catalog entry: ") + e.what());
  }
}

}  // namespace detail

std::string to_json_line(const CatalogEntry& entry) { return detail::entry_to_json(entry).dump(); }

CatalogEntry parse_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  auto entry = detail::entry_from_json(j);
  if (j.contains("report")) entry.report = make_report(entry.code);
  return entry;
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) out << to_json_line(e) << '\n';
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      entries.push_back(parse_json_line(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return entries;
}

std::vector<CatalogEntry> read_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_catalog(in);
}

void write_catalog_file(const std::string& path, const std::vector<CatalogEntry>& entries) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  write_catalog(out, entries);
  if (!out) throw Error("write failed for " + path);
}

std::string report_to_json(const InvariantReport& report) { return detail::report_json(report).dump(); }

}  // namespace polyspace
