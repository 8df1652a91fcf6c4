#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laman/engine.hpp"

namespace laman {

// One persisted `count` result, keyed by the input's canonical fingerprint.
struct RunRecord {
    std::string fingerprint; // canonical key, hex
    std::uint32_t n_vertices = 0;
    std::uint32_t n_edges = 0;
    std::uint64_t laman_number = 0;
    RecursionStats stats;
    std::string version;
    std::string timestamp; // ISO 8601 UTC
};

std::string current_timestamp();

std::string to_json_line(const RunRecord& rec);
RunRecord run_record_from_json_line(const std::string& line);

// Missing file reads as empty. Malformed lines are input errors.
std::vector<RunRecord> load_run_records(const std::string& path);

// Appends after checking that no existing record binds the same fingerprint
// to a different number.
void append_run_record(const std::string& path, const RunRecord& rec);

} // namespace laman
