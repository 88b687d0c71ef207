#include "regraph/library.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <stdexcept>

#include "regraph/canon.hpp"
#include "regraph/graph6.hpp"
#include "regraph/manifest.hpp"
#include "regraph/metrics.hpp"
#include "regraph/rng.hpp"

namespace fs = std::filesystem;

namespace regraph {

namespace {

// stream ids for seed derivation
constexpr std::uint64_t kWmStream = 0;
constexpr std::uint64_t kCcStream = 1;
constexpr std::uint64_t kSubsampleStream = 2;

GraphRecord make_record(const Graph& g, double chi, int bin, Source source, std::uint64_t seed,
                        int run) {
    GraphRecord r;
    r.g6 = graph6_encode(g);
    r.n = g.vertex_count();
    r.k = g.degree();
    r.bin = bin;
    r.chi = chi;
    r.mean_distance = mean_graph_distance(g);
    r.source = source;
    r.seed = seed;
    r.run = run;
    return r;
}

// The CSV keeps six decimals; chi and mean_distance are recomputed from the
// graphs on load so a resumed build bit-matches a fresh one.
void refresh_derived(std::vector<GraphRecord>& records) {
    for (auto& r : records) {
        const Graph g = graph6_decode(r.g6);
        r.chi = clustering_coefficient(g);
        r.mean_distance = mean_graph_distance(g);
    }
}

struct CheckpointStore {
    std::string dir;  // empty = checkpointing off

    std::string run_path(int n, const char* tag, int run) const {
        char buf[128];
        std::snprintf(buf, sizeof buf, "n%d_%s_run%05d.csv", n, tag, run);
        return (fs::path(dir) / buf).string();
    }

    bool has(int n, const char* tag, int run) const {
        return !dir.empty() && fs::exists(run_path(n, tag, run));
    }

    std::vector<GraphRecord> load(int n, const char* tag, int run) const {
        auto records = read_records_csv(run_path(n, tag, run));
        refresh_derived(records);
        return records;
    }

    void store(int n, const char* tag, int run, const std::vector<GraphRecord>& records) const {
        if (dir.empty()) return;
        write_records_csv(run_path(n, tag, run), records);
    }
};

}  // namespace

std::size_t DedupedSample::total() const {
    std::size_t t = 0;
    for (const auto& b : bins) t += b.size();
    return t;
}

std::size_t LibraryN::final_total() const {
    std::size_t t = 0;
    for (const auto& b : final_bins) t += b.size();
    return t;
}

namespace {

CampaignOutcome run_wm_impl(const RunConfig& cfg, int n, const CheckpointStore& ckpt) {
    const BinAssigner assigner = BinAssigner::make(n, cfg.k);
    CampaignOutcome out;
    out.raw_counts.assign(assigner.bin_count, 0);

    std::vector<int> deposited(assigner.bin_count, 0);
    long draws_done = 0;
    int run = 0;
    while (draws_done < cfg.wm_count_target) {
        bool full = true;
        for (int b = 0; b < assigner.bin_count && full; ++b)
            full = deposited[b] >= cfg.target_per_bin;
        if (full) break;

        const std::uint64_t seed = derive_seed(cfg.master_seed, kWmStream, n, run);
        const long chunk = std::min<long>(cfg.wm_chunk, cfg.wm_count_target - draws_done);
        std::vector<GraphRecord> records;
        if (ckpt.has(n, "wm", run)) {
            records = ckpt.load(n, "wm", run);
        } else {
            const PairingConfig pairing{cfg.pairing_attempt_cap};
            Rng rng(seed);
            // run the chunk against the campaign-level remaining room per bin
            std::vector<int> room(assigner.bin_count);
            for (int b = 0; b < assigner.bin_count; ++b)
                room[b] = std::max(0, cfg.target_per_bin - deposited[b]);
            for (long d = 0; d < chunk; ++d) {
                Graph g = uniform_regular(n, cfg.k, rng, pairing);
                const double chi = clustering_coefficient(g);
                const int bin = assigner.assign(chi);
                if (room[bin] > 0) {
                    --room[bin];
                    records.push_back(make_record(g, chi, bin, Source::WM, seed, run));
                }
            }
            ckpt.store(n, "wm", run, records);
        }
        for (const auto& r : records) {
            ++out.raw_counts[r.bin];
            ++deposited[r.bin];
            out.records.push_back(r);
        }
        draws_done += chunk;
        ++run;
    }
    out.attempts = draws_done;
    out.runs = run;
    return out;
}

CampaignOutcome run_cc_impl(const RunConfig& cfg, int n, const CheckpointStore& ckpt) {
    const BinAssigner assigner = BinAssigner::make(n, cfg.k);
    const Graph start = cave_chain(n, cfg.k);
    CampaignOutcome out;
    out.raw_counts.assign(assigner.bin_count, 0);

    std::vector<int> deposited(assigner.bin_count, 0);
    for (int run = 0; run < cfg.cc_max_runs; ++run) {
        bool full = true;
        for (int b = 0; b < assigner.bin_count && full; ++b)
            full = deposited[b] >= cfg.target_per_bin;
        if (full) break;

        const std::uint64_t seed = derive_seed(cfg.master_seed, kCcStream, n, run);
        std::vector<GraphRecord> records;
        if (ckpt.has(n, "cc", run)) {
            records = ckpt.load(n, "cc", run);
        } else {
            WalkConfig wc;
            wc.batch_cap = cfg.batch_cap;
            wc.abort_limit = cfg.abort_limit;
            wc.seed = seed;
            wc.target_per_bin = cfg.target_per_bin;
            std::vector<int> room(assigner.bin_count);
            for (int b = 0; b < assigner.bin_count; ++b)
                room[b] = std::min(cfg.batch_cap, std::max(0, cfg.target_per_bin - deposited[b]));
            const auto batch = build_down_run(start, wc, assigner, &room);
            records.reserve(batch.size());
            for (const auto& s : batch)
                records.push_back(make_record(s.graph, s.chi, s.bin, Source::CC, seed, run));
            ckpt.store(n, "cc", run, records);
        }
        for (const auto& r : records) {
            ++out.raw_counts[r.bin];
            ++deposited[r.bin];
            out.records.push_back(r);
        }
        out.attempts += static_cast<long>(records.size());
        ++out.runs;
    }
    return out;
}

}  // namespace

CampaignOutcome run_wm(const RunConfig& cfg, int n) {
    return run_wm_impl(cfg, n, CheckpointStore{});
}

CampaignOutcome run_cc(const RunConfig& cfg, int n) {
    return run_cc_impl(cfg, n, CheckpointStore{});
}

std::pair<CampaignOutcome, CampaignOutcome> run_census(const RunConfig& cfg, int n) {
    const BinAssigner assigner = BinAssigner::make(n, cfg.k);
    const Graph start = cave_chain(n, cfg.k);
    PairingConfig pairing{cfg.pairing_attempt_cap};

    CampaignOutcome wm, cc;
    wm.census = cc.census = true;
    wm.raw_counts.assign(assigner.bin_count, 0);
    cc.raw_counts.assign(assigner.bin_count, 0);

    DedupIndex index;
    long since_new = 0;
    int block = 0;

    auto consume = [&](const Graph& g, double chi, Source source, std::uint64_t seed, int run) {
        const int bin = assigner.assign(chi);
        CampaignOutcome& side = source == Source::WM ? wm : cc;
        ++side.raw_counts[bin];
        ++side.attempts;
        if (index.insert(g)) {
            since_new = 0;
            side.records.push_back(make_record(g, chi, bin, source, seed, run));
        } else {
            ++since_new;
        }
    };

    while (since_new < cfg.census_window) {
        {
            const std::uint64_t seed = derive_seed(cfg.master_seed, kWmStream, n, block);
            Rng rng(seed);
            for (int d = 0; d < cfg.wm_chunk && since_new < cfg.census_window; ++d) {
                Graph g = uniform_regular(n, cfg.k, rng, pairing);
                const double chi = clustering_coefficient(g);
                consume(g, chi, Source::WM, seed, block);
            }
            ++wm.runs;
        }
        if (since_new >= cfg.census_window) break;
        {
            const std::uint64_t seed = derive_seed(cfg.master_seed, kCcStream, n, block);
            WalkConfig wc;
            wc.batch_cap = cfg.batch_cap;
            wc.abort_limit = cfg.abort_limit;
            wc.seed = seed;
            const auto batch = build_down_run(start, wc, assigner);
            for (const auto& s : batch) {
                consume(s.graph, s.chi, Source::CC, seed, block);
                if (since_new >= cfg.census_window) break;
            }
            ++cc.runs;
        }
        ++block;
    }
    return {std::move(wm), std::move(cc)};
}

DedupedSample dedup_records(const std::vector<GraphRecord>& records, const BinAssigner& assigner,
                            const std::vector<long>* raw_counts) {
    DedupedSample out;
    out.assigner = assigner;
    out.bins.resize(assigner.bin_count);
    out.raw_counts.assign(assigner.bin_count, 0);
    DedupIndex index;
    for (const auto& r : records) {
        const int bin = r.bin >= 0 ? r.bin : assigner.assign(r.chi);
        ++out.raw_counts[bin];
        Graph g = graph6_decode(r.g6);
        if (index.insert(g)) {
            GraphRecord copy = r;
            copy.bin = bin;
            out.bins[bin].push_back(std::move(copy));
        }
    }
    if (raw_counts) out.raw_counts = *raw_counts;
    return out;
}

MergedSample merge_and_dedup(const DedupedSample& wm, const DedupedSample& cc) {
    if (wm.assigner != cc.assigner)
        throw std::invalid_argument("merge_and_dedup: config mismatch between samples");
    const int bins = wm.assigner.bin_count;

    MergedSample out;
    out.sample.assigner = wm.assigner;
    out.sample.bins.resize(bins);
    out.sample.raw_counts.assign(bins, 0);
    out.stats.wm_only.assign(bins, 0);
    out.stats.cc_only.assign(bins, 0);
    out.stats.overlap.assign(bins, 0);

    DedupIndex index;
    for (int b = 0; b < bins; ++b) {
        out.sample.raw_counts[b] = wm.raw_counts[b] + cc.raw_counts[b];
        for (const auto& r : wm.bins[b]) {
            if (index.insert(graph6_decode(r.g6))) {
                out.sample.bins[b].push_back(r);
                ++out.stats.wm_only[b];
            }
        }
        for (const auto& r : cc.bins[b]) {
            if (index.insert(graph6_decode(r.g6))) {
                out.sample.bins[b].push_back(r);
                ++out.stats.cc_only[b];
            } else {
                ++out.stats.overlap[b];
            }
        }
    }
    // classes found by both sources are counted in overlap, not wm_only
    for (int b = 0; b < bins; ++b) out.stats.wm_only[b] -= out.stats.overlap[b];
    return out;
}

SubsampleResult subsample_bin(const std::vector<GraphRecord>& bin, const SubsampleParams& params) {
    SubsampleResult res;
    std::vector<double> values;
    values.reserve(bin.size());
    for (const auto& r : bin) values.push_back(r.mean_distance);

    if (!bin.empty()) {
        res.before = sample_moments(values);
        if (values.size() >= 8) res.before.cvm_p = cvm_normality(values, params.cvm_null_draws);
    }

    if (static_cast<int>(bin.size()) <= params.batch_size) {
        res.chosen.resize(bin.size());
        std::iota(res.chosen.begin(), res.chosen.end(), 0);
        res.after = res.before;
        return res;
    }

    Rng rng(params.seed);
    const int m = static_cast<int>(bin.size());
    std::vector<int> idx(m);
    std::vector<int> best;
    double best_p = -1.0;
    std::vector<double> batch_values(params.batch_size);

    auto draw_one = [&]() {
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < params.batch_size; ++i) {
            const std::size_t j = i + rng.below(static_cast<std::uint64_t>(m - i));
            std::swap(idx[i], idx[j]);
        }
        for (int i = 0; i < params.batch_size; ++i) batch_values[i] = values[idx[i]];
        const double p = cvm_normality(batch_values, params.cvm_null_draws);
        if (p > best_p) {
            best_p = p;
            best.assign(idx.begin(), idx.begin() + params.batch_size);
        }
    };

    long draws_used = 0;
    for (; draws_used < params.draws; ++draws_used) draw_one();
    while (best_p <= params.p_threshold && draws_used < params.max_draws) {
        draw_one();
        ++draws_used;
    }
    res.draws_used = draws_used;

    std::sort(best.begin(), best.end());
    res.chosen = std::move(best);
    std::vector<double> after_values;
    after_values.reserve(res.chosen.size());
    for (int i : res.chosen) after_values.push_back(values[i]);
    res.after = sample_moments(after_values);
    res.after.cvm_p = best_p;
    return res;
}

namespace {

LibraryN build_one_n(const RunConfig& cfg, int n, const CheckpointStore& ckpt,
                     const std::string& raw_dir) {
    LibraryN lib;
    lib.n = n;
    lib.assigner = BinAssigner::make(n, cfg.k);

    const bool census = n <= cfg.census_max_n;
    const std::string wm_raw = (fs::path(raw_dir) / ("n" + std::to_string(n) + "_wm.csv")).string();
    const std::string cc_raw = (fs::path(raw_dir) / ("n" + std::to_string(n) + "_cc.csv")).string();
    const std::string wm_meta = wm_raw + ".meta.json";
    const std::string cc_meta = cc_raw + ".meta.json";

    if (!raw_dir.empty() && fs::exists(wm_raw) && fs::exists(cc_raw) && fs::exists(wm_meta) &&
        fs::exists(cc_meta)) {
        const auto load = [&](const std::string& rec_path, const std::string& meta_path) {
            CampaignOutcome out;
            out.records = read_records_csv(rec_path);
            refresh_derived(out.records);
            const auto meta = read_meta_json(meta_path);
            out.attempts = meta.attempts;
            out.runs = meta.runs;
            out.census = meta.census;
            out.raw_counts = meta.raw_counts;
            return out;
        };
        lib.wm = load(wm_raw, wm_meta);
        lib.cc = load(cc_raw, cc_meta);
    } else {
        if (census) {
            auto [wm, cc] = run_census(cfg, n);
            lib.wm = std::move(wm);
            lib.cc = std::move(cc);
        } else {
            lib.wm = run_wm_impl(cfg, n, ckpt);
            lib.cc = run_cc_impl(cfg, n, ckpt);
        }
        if (!raw_dir.empty()) {
            write_records_csv(wm_raw, lib.wm.records);
            write_records_csv(cc_raw, lib.cc.records);
            write_meta_json(wm_meta, CampaignMeta{n, Source::WM, lib.wm.attempts, lib.wm.runs,
                                                  lib.wm.census, lib.wm.raw_counts});
            write_meta_json(cc_meta, CampaignMeta{n, Source::CC, lib.cc.attempts, lib.cc.runs,
                                                  lib.cc.census, lib.cc.raw_counts});
        }
    }

    const auto wm_binned = dedup_records(lib.wm.records, lib.assigner, &lib.wm.raw_counts);
    const auto cc_binned = dedup_records(lib.cc.records, lib.assigner, &lib.cc.raw_counts);
    auto merged = merge_and_dedup(wm_binned, cc_binned);

    lib.final_bins.resize(lib.assigner.bin_count);
    lib.bin_stats.resize(lib.assigner.bin_count);
    for (int b = 0; b < lib.assigner.bin_count; ++b) {
        auto& bin = merged.sample.bins[b];
        BinStats st;
        st.n = n;
        st.bin = b;
        st.chi_low = lib.assigner.low(b);
        st.chi_high = lib.assigner.high(b);
        st.wm_raw = wm_binned.raw_counts[b];
        st.cc_raw = cc_binned.raw_counts[b];
        st.wm_noniso = static_cast<long>(wm_binned.bins[b].size());
        st.cc_noniso = static_cast<long>(cc_binned.bins[b].size());
        st.wm_only = merged.stats.wm_only[b];
        st.cc_only = merged.stats.cc_only[b];
        st.overlap = merged.stats.overlap[b];
        st.merged = static_cast<long>(bin.size());

        if (!bin.empty()) {
            SubsampleParams params;
            params.batch_size = cfg.batch_size;
            params.draws = cfg.draws;
            params.max_draws = cfg.max_draws;
            params.p_threshold = cfg.p_threshold;
            params.cvm_null_draws = cfg.cvm_null_draws;
            params.seed = derive_seed(cfg.master_seed, kSubsampleStream, n, b);
            auto sub = subsample_bin(bin, params);
            st.before = sub.before;
            st.after = sub.after;
            st.final_count = static_cast<long>(sub.chosen.size());
            for (int i : sub.chosen) {
                GraphRecord rec = bin[i];
                rec.canonical_id = canonical_form(graph6_decode(rec.g6)).g6;
                lib.final_bins[b].push_back(std::move(rec));
            }
            std::sort(lib.final_bins[b].begin(), lib.final_bins[b].end(),
                      [](const GraphRecord& a, const GraphRecord& bb) {
                          return a.canonical_id < bb.canonical_id;
                      });
        }
        lib.bin_stats[b] = st;
    }
    return lib;
}

}  // namespace

LibraryData build_library(const RunConfig& cfg) {
    LibraryData data;
    data.config = cfg;

    std::string raw_dir, ckpt_dir;
    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        const std::string cfg_path = (fs::path(cfg.out_dir) / "config.json").string();
        if (fs::exists(cfg_path) && !configs_equivalent(read_config_json(cfg_path), cfg))
            throw std::runtime_error(
                "build_library: " + cfg.out_dir +
                " holds data built with a different configuration; use a clean directory");
        raw_dir = (fs::path(cfg.out_dir) / "raw").string();
        ckpt_dir = (fs::path(cfg.out_dir) / "checkpoints").string();
        fs::create_directories(raw_dir);
        fs::create_directories(ckpt_dir);
        write_config_json(cfg_path, cfg);
    }
    CheckpointStore ckpt{ckpt_dir};

    for (int n : cfg.n_list) data.per_n.push_back(build_one_n(cfg, n, ckpt, raw_dir));

    if (!cfg.out_dir.empty()) {
        std::vector<GraphRecord> manifest_rows;
        std::vector<BinStats> stats_rows;
        for (const auto& lib : data.per_n) {
            const fs::path n_dir = fs::path(cfg.out_dir) / ("n" + std::to_string(lib.n));
            for (int b = 0; b < lib.assigner.bin_count; ++b) {
                if (lib.final_bins[b].empty()) continue;
                std::vector<std::string> lines;
                lines.reserve(lib.final_bins[b].size());
                for (const auto& r : lib.final_bins[b]) {
                    manifest_rows.push_back(r);
                    lines.push_back(r.canonical_id);
                }
                write_lines((n_dir / bin_file_name(lib.assigner, b)).string(), lines);
            }
            for (const auto& st : lib.bin_stats) stats_rows.push_back(st);
        }
        write_manifest_csv((fs::path(cfg.out_dir) / "manifest.csv").string(), manifest_rows);
        write_bin_stats_csv((fs::path(cfg.out_dir) / "bins.csv").string(), stats_rows);

        // per-run checkpoints are superseded by the consolidated raw files
        std::error_code ec;
        fs::remove_all(ckpt_dir, ec);
    }
    return data;
}

}  // namespace regraph
