#pragma once

#include <string>
#include <vector>

#include "regraph/library.hpp"

namespace regraph {

/// Sidecar metadata of one campaign's consolidated raw records.
struct CampaignMeta {
    int n = 0;
    Source source = Source::WM;
    long attempts = 0;
    int runs = 0;
    bool census = false;
    std::vector<long> raw_counts;
};

/// Fixed-point formatting used everywhere a value enters a CSV: six decimals,
/// "NA" for NaN. Keeps manifests byte-stable.
std::string format_double6(double v);
double parse_double6(const std::string& s);  // NaN for "NA"

std::string bin_file_name(const BinAssigner& assigner, int bin);

// All writers are atomic (temp file + rename).
void write_records_csv(const std::string& path, const std::vector<GraphRecord>& records);
std::vector<GraphRecord> read_records_csv(const std::string& path);

void write_meta_json(const std::string& path, const CampaignMeta& meta);
CampaignMeta read_meta_json(const std::string& path);

void write_manifest_csv(const std::string& path, const std::vector<GraphRecord>& rows);
std::vector<GraphRecord> read_manifest_csv(const std::string& path);

void write_bin_stats_csv(const std::string& path, const std::vector<BinStats>& rows);
std::vector<BinStats> read_bin_stats_csv(const std::string& path);

void write_config_json(const std::string& path, const RunConfig& cfg);
RunConfig read_config_json(const std::string& path);

/// True iff the two configs describe the same build (out_dir excluded).
bool configs_equivalent(const RunConfig& a, const RunConfig& b);

void write_lines(const std::string& path, const std::vector<std::string>& lines);
std::vector<std::string> read_lines(const std::string& path);

}  // namespace regraph
