#include "report.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace lklab::cli {

namespace {

std::string iso_timestamp_utc()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm {};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

json make_report(const std::string& command, uint64_t seed)
{
    json rep;
    rep["schema_version"] = 1;
    rep["command"] = command;
    rep["seed"] = seed;
    return rep;
}

void stamp_report(json& rep, bool with_time, std::chrono::steady_clock::time_point start)
{
    if (!with_time)
        return;
    rep["timestamp"] = iso_timestamp_utc();
    rep["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
}

void emit_report(const json& rep, const std::string& out_path)
{
    emit_text(rep.dump(2) + "\n", out_path);
}

void emit_text(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

} // namespace lklab::cli
