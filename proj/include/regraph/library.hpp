#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regraph/binning.hpp"
#include "regraph/generators.hpp"
#include "regraph/stats.hpp"

namespace regraph {

enum class Source { WM, CC };

const char* to_string(Source s);
Source source_from_string(const std::string& s);

/// One sampled graph with everything needed to rebuild or audit the library.
struct GraphRecord {
    std::string g6;  // as-generated labeling
    int n = 0;
    int k = 0;
    int bin = -1;
    double chi = 0.0;
    double mean_distance = 0.0;
    Source source = Source::WM;
    std::uint64_t seed = 0;  // seed of the run/block that produced it
    int run = 0;
    std::string canonical_id;  // graph6 of the canonical labeling; filled at finalization
};

/// Full parameter set of a build; serialized verbatim into the output so a
/// run can be replicated exactly.
struct RunConfig {
    std::vector<int> n_list;
    int k = 4;
    int target_per_bin = 1000;   // per-source raw deposits per bin
    long wm_count_target = 15000;  // pairing-model draws per n
    int wm_chunk = 1000;         // draws per checkpointable block
    int cc_max_runs = 100;       // build-down runs per n
    int batch_cap = 20;          // per-bin cap inside one build-down run
    int abort_limit = 500;
    int batch_size = 100;        // final bin size
    int draws = 10000;           // subsample draws before the threshold check
    int max_draws = 100000;
    double p_threshold = 0.999;
    int cvm_null_draws = 10000;
    int pairing_attempt_cap = 10000;
    long census_window = 1000000;  // saturation window for census-mode sizes
    int census_max_n = 10;         // n <= this is built by exhaustive census
    std::uint64_t master_seed = 1;
    std::string out_dir;
};

/// Raw harvest of one campaign. For census-mode sizes, records holds only the
/// first representative of each class while raw_counts/attempts still tally
/// every candidate.
struct CampaignOutcome {
    std::vector<GraphRecord> records;  // generation order
    std::vector<long> raw_counts;      // per-bin raw deposits
    long attempts = 0;                 // candidate graphs produced
    int runs = 0;
    bool census = false;
};

CampaignOutcome run_wm(const RunConfig& cfg, int n);
CampaignOutcome run_cc(const RunConfig& cfg, int n);

/// Saturation census: interleaves pairing-model blocks and build-down runs,
/// deduplicating as it goes, until census_window consecutive candidates yield
/// no new isomorphism class. Returns per-source outcomes holding the class
/// representatives each source found first.
std::pair<CampaignOutcome, CampaignOutcome> run_census(const RunConfig& cfg, int n);

/// Per-bin unique isomorphism classes of one source.
struct DedupedSample {
    BinAssigner assigner;
    std::vector<std::vector<GraphRecord>> bins;
    std::vector<long> raw_counts;

    std::size_t total() const;
};

DedupedSample dedup_records(const std::vector<GraphRecord>& records, const BinAssigner& assigner,
                            const std::vector<long>* raw_counts = nullptr);

struct MergeStats {
    std::vector<long> wm_only, cc_only, overlap;
};

struct MergedSample {
    DedupedSample sample;  // per bin: WM classes first, then CC-only classes
    MergeStats stats;
};

/// Union per bin with global isomorphism dedup; counts WM-only, CC-only and
/// overlap classes per bin. Throws std::invalid_argument on assigner mismatch.
MergedSample merge_and_dedup(const DedupedSample& wm, const DedupedSample& cc);

struct SubsampleParams {
    int batch_size = 100;
    int draws = 10000;
    int max_draws = 100000;
    double p_threshold = 0.999;
    int cvm_null_draws = 10000;
    std::uint64_t seed = 0;
};

struct SubsampleResult {
    std::vector<int> chosen;  // indices into the bin, ascending
    SampleMoments before, after;
    long draws_used = 0;
};

/// Bins at or below batch_size are returned unchanged. Larger bins: draw
/// random batch_size-subsets, score each by CvM normality of mean_distance,
/// keep the best; after `draws` draws stop if the best p exceeds p_threshold,
/// otherwise continue one draw at a time until it does or max_draws is
/// reached. Ties keep the first-seen batch.
SubsampleResult subsample_bin(const std::vector<GraphRecord>& bin, const SubsampleParams& params);

struct BinStats {
    int n = 0;
    int bin = 0;
    double chi_low = 0.0, chi_high = 0.0;
    long wm_raw = 0, cc_raw = 0;
    long wm_noniso = 0, cc_noniso = 0;
    long wm_only = 0, cc_only = 0, overlap = 0;
    long merged = 0;
    long final_count = 0;
    SampleMoments before, after;
};

struct LibraryN {
    int n = 0;
    BinAssigner assigner;
    CampaignOutcome wm, cc;
    std::vector<std::vector<GraphRecord>> final_bins;  // canonical ids filled, sorted by id
    std::vector<BinStats> bin_stats;                   // one per bin

    std::size_t final_total() const;
};

struct LibraryData {
    RunConfig config;
    std::vector<LibraryN> per_n;
};

/// Runs the whole pipeline for every n in the config and writes the library
/// (config.json, manifest.csv, bins.csv, per-bin graph6 files, raw campaign
/// records) under cfg.out_dir. Campaign results are checkpointed per
/// (n, source, run) and reused on a rerun, so interrupted builds resume.
/// Deterministic for a fixed config.
LibraryData build_library(const RunConfig& cfg);

}  // namespace regraph
