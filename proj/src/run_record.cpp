#include "laman/run_record.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "laman/errors.hpp"

namespace laman {

std::string current_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string to_json_line(const RunRecord& rec) {
    nlohmann::json j{
        {"fingerprint", rec.fingerprint},
        {"n_vertices", rec.n_vertices},
        {"n_edges", rec.n_edges},
        {"laman_number", rec.laman_number},
        {"stats",
         {{"nodes", rec.stats.nodes},
          {"cache_hits", rec.stats.cache_hits},
          {"splits_enumerated", rec.stats.splits_enumerated},
          {"splits_surviving", rec.stats.splits_surviving},
          {"non_pseudo_laman_unary", rec.stats.non_pseudo_laman_unary},
          {"elapsed_ms", rec.stats.elapsed_ms}}},
        {"version", rec.version},
        {"timestamp", rec.timestamp},
    };
    return j.dump();
}

RunRecord run_record_from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed run record line");
    try {
        RunRecord rec;
        rec.fingerprint = j.at("fingerprint").get<std::string>();
        rec.n_vertices = j.at("n_vertices").get<std::uint32_t>();
        rec.n_edges = j.at("n_edges").get<std::uint32_t>();
        rec.laman_number = j.at("laman_number").get<std::uint64_t>();
        const auto& s = j.at("stats");
        rec.stats.nodes = s.at("nodes").get<std::uint64_t>();
        rec.stats.cache_hits = s.at("cache_hits").get<std::uint64_t>();
        rec.stats.splits_enumerated = s.at("splits_enumerated").get<std::uint64_t>();
        rec.stats.splits_surviving = s.at("splits_surviving").get<std::uint64_t>();
        rec.stats.non_pseudo_laman_unary = s.at("non_pseudo_laman_unary").get<std::uint64_t>();
        rec.stats.elapsed_ms = s.at("elapsed_ms").get<double>();
        rec.version = j.at("version").get<std::string>();
        rec.timestamp = j.at("timestamp").get<std::string>();
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed run record: ") + e.what());
    }
}

std::vector<RunRecord> load_run_records(const std::string& path) {
    std::ifstream in(path);
    std::vector<RunRecord> out;
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(run_record_from_json_line(line));
    }
    return out;
}

void append_run_record(const std::string& path, const RunRecord& rec) {
    for (const RunRecord& old : load_run_records(path))
        if (old.fingerprint == rec.fingerprint && old.laman_number != rec.laman_number)
            throw InputError("run record conflict: fingerprint " + rec.fingerprint +
                             " already bound to a different number");
    std::ofstream out(path, std::ios::app);
    if (!out) throw InputError("cannot open records file: " + path);
    out << to_json_line(rec) << '\n';
}

} // namespace laman
