#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "bnlab/cli.hpp"
#include "bnlab/numeric.hpp"

namespace bnlab {

Json report_json(const RunReport& r) {
    Json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["results"] = r.results;
    j["complete"] = r.complete;
    j["caps"] = r.caps;
    j["version"] = r.version;
    return j;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void text_value(std::ostringstream& os, const Json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_structured() && !it->empty()) {
                os << pad << it.key() << ":\n";
                text_value(os, *it, indent + 2);
            } else {
                os << pad << it.key() << ": " << it->dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object()) {
                os << pad << "-\n";
                text_value(os, e, indent + 2);
            } else {
                os << pad << "- " << e.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string render(const RunReport& r, const std::string& format) {
    if (format == "json") return report_json(r).dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        if (!r.table)
            throw Error(ErrorKind::UnsupportedFormat, "'" + r.command + "' does not produce tabular results");
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
            os << "\n";
        };
        line(r.table->header);
        for (const auto& row : r.table->rows) line(row);
        return os.str();
    }
    if (format != "text") throw Error(ErrorKind::UnsupportedFormat, "unknown format '" + format + "'");

    os << r.command;
    for (auto it = r.params.begin(); it != r.params.end(); ++it) os << " " << it.key() << "=" << it->dump();
    os << "\n";
    if (r.table) {
        std::vector<std::size_t> w(r.table->header.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = r.table->header[i].size();
        for (const auto& row : r.table->rows)
            for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << (i ? "  " : "") << cells[i];
                if (i + 1 < cells.size()) os << std::string(w[i] - cells[i].size(), ' ');
            }
            os << "\n";
        };
        line(r.table->header);
        for (const auto& row : r.table->rows) line(row);
    } else {
        text_value(os, r.results, 0);
    }
    if (!r.complete) os << "INCOMPLETE: a search cap was reached\n";
    return os.str();
}

int exit_code(const RunReport& r) {
    if (!r.complete) return 3;
    if (r.condition_failed) return 1;
    return 0;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_key(const RunReport& r) {
    std::string material = r.command + '\n' + r.params.dump() + '\n' + r.caps.dump() + '\n' + r.version;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(material)));
    return buf;
}

std::filesystem::path cache_dir() {
    const char* env = std::getenv("BNLAB_CACHE");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".bnlab-cache");
}

namespace {

std::mutex cache_mu;

std::filesystem::path cache_file(const RunReport& r) { return cache_dir() / (r.command + "-" + cache_key(r) + ".json"); }

}  // namespace

std::optional<RunReport> cache_load(const RunReport& query) {
    std::ifstream in(cache_file(query));
    if (!in) return std::nullopt;
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.contains("report")) return std::nullopt;
    const Json& j = doc["report"];
    // a hash collision must not replay a different invocation
    if (j.value("command", "") != query.command || j["params"] != query.params || j["caps"] != query.caps ||
        j.value("version", "") != query.version)
        return std::nullopt;
    RunReport r = query;
    r.results = j["results"];
    r.complete = j["complete"].get<bool>();
    r.condition_failed = doc.value("condition_failed", false);
    if (doc.contains("table")) {
        Table t;
        t.header = doc["table"]["header"].get<std::vector<std::string>>();
        t.rows = doc["table"]["rows"].get<std::vector<std::vector<std::string>>>();
        r.table = std::move(t);
    }
    r.from_cache = true;
    return r;
}

void cache_store(const RunReport& r) {
    Json doc;
    doc["report"] = report_json(r);
    doc["condition_failed"] = r.condition_failed;
    if (r.table) doc["table"] = {{"header", r.table->header}, {"rows", r.table->rows}};
    static std::atomic<unsigned> serial{0};
    std::lock_guard<std::mutex> lk(cache_mu);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    auto dest = cache_file(r);
    auto tmp = dest;
    tmp += ".tmp" + std::to_string(serial++);
    {
        std::ofstream out(tmp);
        if (!out) return;  // an unwritable cache only costs recomputation
        out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, dest, ec);
}

std::optional<long long> Config::get_int(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    try {
        std::size_t used = 0;
        long long v = std::stoll(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadParameters, "config key '" + key + "' is not an integer");
    }
}

Config parse_config(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::BadParameters, "config line " + std::to_string(n) + " has no '='");
        std::string v = trim(line.substr(eq + 1));
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
        c.values[trim(line.substr(0, eq))] = v;
    }
    return c;
}

Config load_config(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) return {};
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace bnlab
