// Table, JSON and CSV renderings of gap sequences, classifications and
// verification reports.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxff/autgrp.hpp"
#include "maxff/classify.hpp"
#include "maxff/wsemi.hpp"

namespace maxff {

using Json = nlohmann::ordered_json;

/// "1 2 3" style list.
std::string join_ints(const std::vector<std::int64_t>& v, const std::string& sep = " ");

Json to_json(const AutDescriptor& d);
AutDescriptor aut_from_json(const Json& j);

Json to_json(const Classification& c);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
Classification classification_from_json(const Json& j);

/// Header lines, class table and the gap tables laid out like the q = 25
/// tables (rows per place, two index columns per block).
std::string render_table(const Classification& c);
/// Header "i,place,gaps" with space-separated gaps, one row per (class, place).
std::string render_csv(const Classification& c);

/// Gap table for arbitrary (label, profile) columns.
std::string render_gap_blocks(const std::vector<std::pair<std::int64_t, Profile>>& cols, bool with_palpha,
                              std::size_t per_block = 2);

Json to_json(const VerificationReport& r);

}  // namespace maxff
