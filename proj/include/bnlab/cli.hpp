#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bnlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct RunReport {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    bool complete = true;
    Json caps = Json::object();
    std::string version = kVersion;

    std::optional<Table> table;     // present for tabular results only
    bool condition_failed = false;  // an L-check or scan reported a failure
    bool from_cache = false;
};

Json report_json(const RunReport& r);
// format is one of json, csv, text
std::string render(const RunReport& r, const std::string& format);

int exit_code(const RunReport& r);

// ---- content-addressed cache ----

std::uint64_t fnv1a64(const std::string& bytes);
std::string cache_key(const RunReport& r);
std::filesystem::path cache_dir();
std::optional<RunReport> cache_load(const RunReport& query);
void cache_store(const RunReport& r);

// ---- flat key = value configuration ----

struct Config {
    std::map<std::string, std::string> values;
    std::optional<long long> get_int(const std::string& key) const;
};
Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& p);

struct RunOutcome {
    int exit_code = 0;
    std::string out;
    std::string err;
    std::optional<RunReport> report;
};

// args excludes the program name
RunOutcome run(const std::vector<std::string>& args);

}  // namespace bnlab
