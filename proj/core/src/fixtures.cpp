#include <json.hpp>

#include "polyspace/published_checks.hpp"

namespace polyspace {

namespace detail {
extern const std::string_view kPublishedValuesJson;
}

namespace {

std::vector<GeneticCode> codes(const nlohmann::json& list) {
  std::vector<GeneticCode> out;
  for (const auto& c : list) out.push_back(parse_code(c.get<std::string>()));
  return out;
}

Parallelizable parse_verdict(const std::string& s) {
  if (s == "yes") return Parallelizable::Yes;
  if (s == "no") return Parallelizable::No;
  if (s == "unknown") return Parallelizable::Unknown;
  throw InternalError("bad verdict in fixtures: " + s);
}

PublishedValues load() {
  const auto j = nlohmann::json::parse(detail::kPublishedValuesJson);
  PublishedValues f;
  for (const auto& [key, value] : j.at("census").items()) f.census[std::stoi(key)] = value.get<std::size_t>();
  const auto& s = j.at("seven_gon");
  f.seven_gon.n = s.at("n").get<int>();
  f.seven_gon.catalog_size = s.at("catalog_size").get<std::size_t>();
  f.seven_gon.null_cobordant = s.at("null_cobordant").get<std::size_t>();
  f.seven_gon.cobordant_to_rp = s.at("cobordant_to_rp").get<std::size_t>();
  f.seven_gon.r3_nonzero = s.at("r3_nonzero").get<std::size_t>();
  f.seven_gon.r3_zero_codes = codes(s.at("r3_zero_codes"));
  f.seven_gon.euler_zero_codes = codes(s.at("euler_zero_codes"));
  f.seven_gon.worked_example = parse_code(s.at("worked_example").at("code").get<std::string>());
  f.seven_gon.worked_example_d = s.at("worked_example").at("d").get<std::vector<std::size_t>>();
  f.r2_min_n = j.at("r2_zero").at("min_n").get<int>();
  f.r2_max_n = j.at("r2_zero").at("max_n").get<int>();
  for (const auto& p : j.at("parallelizability")) {
    f.parallel.push_back({parse_code(p.at("code").get<std::string>()), parse_verdict(p.at("expected").get<std::string>())});
  }
  const auto& rules = j.at("parallelizability_rules");
  f.all_parallelizable_n = rules.at("all_yes_n").get<std::vector<int>>();
  f.otherwise_not_parallelizable_n = rules.at("otherwise_no_n").get<std::vector<int>>();
  return f;
}

}  // namespace

std::string_view published_values_json() { return detail::kPublishedValuesJson; }

const PublishedValues& published_values() {
  static const PublishedValues fixtures = load();
  return fixtures;
}

}  // namespace polyspace
