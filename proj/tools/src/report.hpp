#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

namespace lklab::cli {

using nlohmann::json;

// Skeleton report every subcommand fills in. schema_version gates readers;
// the seed is always recorded. Timestamp and wall time are emitted only
// when with_time is set, so seeded runs can be compared byte for byte.
json make_report(const std::string& command, uint64_t seed);

void stamp_report(json& rep, bool with_time, std::chrono::steady_clock::time_point start);

// dump(2) + newline to the file, or stdout when out_path is empty
void emit_report(const json& rep, const std::string& out_path);

void emit_text(const std::string& text, const std::string& out_path);

} // namespace lklab::cli
