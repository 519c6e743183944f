#pragma once

// Private JSON conversions shared by the catalog reader/writer and the
// enumeration checkpoint file.

#include <json.hpp>

#include "polyspace/catalog.hpp"

namespace polyspace::detail {

nlohmann::ordered_json entry_to_json(const CatalogEntry& entry);
CatalogEntry entry_from_json(const nlohmann::json& j);
nlohmann::ordered_json report_json(const InvariantReport& report);

}  // namespace polyspace::detail
