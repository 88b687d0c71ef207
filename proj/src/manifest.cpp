#include "regraph/manifest.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace regraph {

const char* to_string(Source s) { return s == Source::WM ? "WM" : "CC"; }

Source source_from_string(const std::string& s) {
    if (s == "WM") return Source::WM;
    if (s == "CC") return Source::CC;
    throw std::invalid_argument("unknown source: " + s);
}

std::string format_double6(double v) {
    if (std::isnan(v)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double parse_double6(const std::string& s) {
    if (s == "NA") return std::numeric_limits<double>::quiet_NaN();
    return std::stod(s);
}

std::string bin_file_name(const BinAssigner& assigner, int bin) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "bin%02d_chi%.6f-%.6f.g6", bin, assigner.low(bin),
                  assigner.high(bin));
    return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

void atomic_write(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr const char* kRecordHeader = "n,k,bin,graph6,chi,mean_distance,source,seed,run";
constexpr const char* kManifestHeader = "n,k,bin,chi,mean_distance,source,seed,canonical_id";
constexpr const char* kBinStatsHeader =
    "n,bin,chi_low,chi_high,wm_raw,cc_raw,wm_noniso,cc_noniso,wm_only,cc_only,overlap,"
    "merged,final,mean_merged,std_merged,skew_merged,cvm_merged,"
    "mean_final,std_final,skew_final,cvm_final";

}  // namespace

void write_records_csv(const std::string& path, const std::vector<GraphRecord>& records) {
    std::ostringstream out;
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << r.k << ',' << r.bin << ',' << r.g6 << ',' << format_double6(r.chi)
            << ',' << format_double6(r.mean_distance) << ',' << to_string(r.source) << ','
            << r.seed << ',' << r.run << '\n';
    }
    atomic_write(path, out.str());
}

std::vector<GraphRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader)
        throw std::runtime_error("bad record header in " + path);
    std::vector<GraphRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 9) throw std::runtime_error("bad record row in " + path);
        GraphRecord r;
        r.n = std::stoi(f[0]);
        r.k = std::stoi(f[1]);
        r.bin = std::stoi(f[2]);
        r.g6 = f[3];
        r.chi = parse_double6(f[4]);
        r.mean_distance = parse_double6(f[5]);
        r.source = source_from_string(f[6]);
        r.seed = std::stoull(f[7]);
        r.run = std::stoi(f[8]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_meta_json(const std::string& path, const CampaignMeta& meta) {
    json j;
    j["n"] = meta.n;
    j["source"] = to_string(meta.source);
    j["attempts"] = meta.attempts;
    j["runs"] = meta.runs;
    j["census"] = meta.census;
    j["raw_counts"] = meta.raw_counts;
    atomic_write(path, j.dump(2) + "\n");
}

CampaignMeta read_meta_json(const std::string& path) {
    const json j = json::parse(read_file(path));
    CampaignMeta meta;
    meta.n = j.at("n").get<int>();
    meta.source = source_from_string(j.at("source").get<std::string>());
    meta.attempts = j.at("attempts").get<long>();
    meta.runs = j.at("runs").get<int>();
    meta.census = j.at("census").get<bool>();
    meta.raw_counts = j.at("raw_counts").get<std::vector<long>>();
    return meta;
}

void write_manifest_csv(const std::string& path, const std::vector<GraphRecord>& rows) {
    std::ostringstream out;
    out << kManifestHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.bin << ',' << format_double6(r.chi) << ','
            << format_double6(r.mean_distance) << ',' << to_string(r.source) << ',' << r.seed
            << ',' << r.canonical_id << '\n';
    }
    atomic_write(path, out.str());
}

std::vector<GraphRecord> read_manifest_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != kManifestHeader)
        throw std::runtime_error("bad manifest header in " + path);
    std::vector<GraphRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 8) throw std::runtime_error("bad manifest row in " + path);
        GraphRecord r;
        r.n = std::stoi(f[0]);
        r.k = std::stoi(f[1]);
        r.bin = std::stoi(f[2]);
        r.chi = parse_double6(f[3]);
        r.mean_distance = parse_double6(f[4]);
        r.source = source_from_string(f[5]);
        r.seed = std::stoull(f[6]);
        r.canonical_id = f[7];
        r.g6 = r.canonical_id;
        out.push_back(std::move(r));
    }
    return out;
}

void write_bin_stats_csv(const std::string& path, const std::vector<BinStats>& rows) {
    std::ostringstream out;
    out << kBinStatsHeader << '\n';
    for (const auto& s : rows) {
        out << s.n << ',' << s.bin << ',' << format_double6(s.chi_low) << ','
            << format_double6(s.chi_high) << ',' << s.wm_raw << ',' << s.cc_raw << ','
            << s.wm_noniso << ',' << s.cc_noniso << ',' << s.wm_only << ',' << s.cc_only << ','
            << s.overlap << ',' << s.merged << ',' << s.final_count << ','
            << format_double6(s.before.mean) << ',' << format_double6(s.before.std_dev) << ','
            << format_double6(s.before.skewness) << ',' << format_double6(s.before.cvm_p) << ','
            << format_double6(s.after.mean) << ',' << format_double6(s.after.std_dev) << ','
            << format_double6(s.after.skewness) << ',' << format_double6(s.after.cvm_p) << '\n';
    }
    atomic_write(path, out.str());
}

std::vector<BinStats> read_bin_stats_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != kBinStatsHeader)
        throw std::runtime_error("bad bin stats header in " + path);
    std::vector<BinStats> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 21) throw std::runtime_error("bad bin stats row in " + path);
        BinStats s;
        s.n = std::stoi(f[0]);
        s.bin = std::stoi(f[1]);
        s.chi_low = parse_double6(f[2]);
        s.chi_high = parse_double6(f[3]);
        s.wm_raw = std::stol(f[4]);
        s.cc_raw = std::stol(f[5]);
        s.wm_noniso = std::stol(f[6]);
        s.cc_noniso = std::stol(f[7]);
        s.wm_only = std::stol(f[8]);
        s.cc_only = std::stol(f[9]);
        s.overlap = std::stol(f[10]);
        s.merged = std::stol(f[11]);
        s.final_count = std::stol(f[12]);
        s.before.mean = parse_double6(f[13]);
        s.before.std_dev = parse_double6(f[14]);
        s.before.skewness = parse_double6(f[15]);
        s.before.cvm_p = parse_double6(f[16]);
        s.after.mean = parse_double6(f[17]);
        s.after.std_dev = parse_double6(f[18]);
        s.after.skewness = parse_double6(f[19]);
        s.after.cvm_p = parse_double6(f[20]);
        out.push_back(s);
    }
    return out;
}

namespace {

json config_to_json(const RunConfig& cfg);

}  // namespace

bool configs_equivalent(const RunConfig& a, const RunConfig& b) {
    return config_to_json(a) == config_to_json(b);
}

void write_config_json(const std::string& path, const RunConfig& cfg) {
    atomic_write(path, config_to_json(cfg).dump(2) + "\n");
}

namespace {

json config_to_json(const RunConfig& cfg) {
    json j;
    j["n_list"] = cfg.n_list;
    j["k"] = cfg.k;
    j["target_per_bin"] = cfg.target_per_bin;
    j["wm_count_target"] = cfg.wm_count_target;
    j["wm_chunk"] = cfg.wm_chunk;
    j["cc_max_runs"] = cfg.cc_max_runs;
    j["batch_cap"] = cfg.batch_cap;
    j["abort_limit"] = cfg.abort_limit;
    j["batch_size"] = cfg.batch_size;
    j["draws"] = cfg.draws;
    j["max_draws"] = cfg.max_draws;
    j["p_threshold"] = cfg.p_threshold;
    j["cvm_null_draws"] = cfg.cvm_null_draws;
    j["pairing_attempt_cap"] = cfg.pairing_attempt_cap;
    j["census_window"] = cfg.census_window;
    j["census_max_n"] = cfg.census_max_n;
    j["master_seed"] = cfg.master_seed;
    atomic_write(path, j.dump(2) + "\n");
}

RunConfig read_config_json(const std::string& path) {
    const json j = json::parse(read_file(path));
    RunConfig cfg;
    cfg.n_list = j.at("n_list").get<std::vector<int>>();
    cfg.k = j.at("k").get<int>();
    cfg.target_per_bin = j.at("target_per_bin").get<int>();
    cfg.wm_count_target = j.at("wm_count_target").get<long>();
    cfg.wm_chunk = j.at("wm_chunk").get<int>();
    cfg.cc_max_runs = j.at("cc_max_runs").get<int>();
    cfg.batch_cap = j.at("batch_cap").get<int>();
    cfg.abort_limit = j.at("abort_limit").get<int>();
    cfg.batch_size = j.at("batch_size").get<int>();
    cfg.draws = j.at("draws").get<int>();
    cfg.max_draws = j.at("max_draws").get<int>();
    cfg.p_threshold = j.at("p_threshold").get<double>();
    cfg.cvm_null_draws = j.at("cvm_null_draws").get<int>();
    cfg.pairing_attempt_cap = j.at("pairing_attempt_cap").get<int>();
    cfg.census_window = j.at("census_window").get<long>();
    cfg.census_max_n = j.at("census_max_n").get<int>();
    cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    return cfg;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ostringstream out;
    for (const auto& l : lines) out << l << '\n';
    atomic_write(path, out.str());
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

}  // namespace regraph
