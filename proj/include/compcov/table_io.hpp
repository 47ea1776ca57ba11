#pragma once

#include "compcov/count_sums.hpp"
#include "compcov/count_tables.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace compcov {

/// Record shared by the cache and the `table` command:
///   {"format": "compcov.table", "ensemble": "...", "n": 3,
///    "entries": [[x, y, "count"], ...]}
/// Only nonzero entries are listed; counts are decimal strings.
nlohmann::json table_to_json(const JointCountTable& table);
/// Throws std::runtime_error on anything malformed.
JointCountTable table_from_json(const nlohmann::json& record);

nlohmann::json sums_to_json(const CountSums& sums);
CountSums sums_from_json(const nlohmann::json& record);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace compcov
