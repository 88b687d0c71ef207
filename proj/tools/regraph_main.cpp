#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "regraph/canon.hpp"
#include "regraph/export.hpp"
#include "regraph/graph6.hpp"
#include "regraph/library.hpp"
#include "regraph/manifest.hpp"
#include "regraph/metrics.hpp"
#include "regraph/report.hpp"
#include "regraph/rng.hpp"
#include "regraph/verify.hpp"

namespace fs = std::filesystem;
using namespace regraph;

namespace {

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--k", cfg.k, "uniform degree");
    cmd->add_option("--seed", cfg.master_seed, "master seed");
    cmd->add_option("--target-per-bin", cfg.target_per_bin, "raw deposits per bin per source");
    cmd->add_option("--wm-count", cfg.wm_count_target, "pairing-model draws per n");
    cmd->add_option("--wm-chunk", cfg.wm_chunk, "draws per checkpoint block");
    cmd->add_option("--cc-runs", cfg.cc_max_runs, "build-down runs per n");
    cmd->add_option("--batch-cap", cfg.batch_cap, "per-bin cap inside one build-down run");
    cmd->add_option("--abort-limit", cfg.abort_limit, "consecutive no-deposit steps ending a run");
    cmd->add_option("--batch-size", cfg.batch_size, "final bin size");
    cmd->add_option("--draws", cfg.draws, "subsample draws before the threshold check");
    cmd->add_option("--max-draws", cfg.max_draws, "subsample draw limit");
    cmd->add_option("--p-threshold", cfg.p_threshold, "normality score threshold");
    cmd->add_option("--cvm-null-draws", cfg.cvm_null_draws, "bootstrap draws per null table");
    cmd->add_option("--pairing-cap", cfg.pairing_attempt_cap, "matchings tried per draw");
    cmd->add_option("--census-window", cfg.census_window, "saturation window for census sizes");
    cmd->add_option("--census-max-n", cfg.census_max_n, "largest n built by exhaustive census");
}

int cmd_estimate(const std::vector<int>& ns, bool decimal) {
    std::printf("n,known_count,estimate_log10,estimate\n");
    for (int n : ns) {
        const auto base = decimal ? LogBase::decimal : LogBase::natural;
        const auto known = known_population_count(n);
        std::printf("%d,%s,%s,%.6g\n", n, known ? std::to_string(*known).c_str() : "NA",
                    format_double6(population_estimate_log10(n, base)).c_str(),
                    population_estimate(n, base));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generator and curator of k-regular connected graph libraries"};
    app.require_subcommand(1);

    RunConfig cfg;

    // build
    auto* build = app.add_subcommand("build", "run the full pipeline and write a library");
    std::vector<int> build_n;
    build->add_option("--n", build_n, "vertex counts (repeatable)")->required();
    std::string build_out = "library";
    build->add_option("--out", build_out, "output directory");
    add_common_flags(build, cfg);

    // gen-cc
    auto* gen_cc = app.add_subcommand("gen-cc", "build-down campaign, raw records to CSV");
    int gc_n = 15;
    std::string gc_out = "cc_records.csv";
    gen_cc->add_option("--n", gc_n, "vertex count")->required();
    gen_cc->add_option("--out", gc_out, "records CSV path");
    add_common_flags(gen_cc, cfg);

    // gen-uniform
    auto* gen_wm = app.add_subcommand("gen-uniform", "pairing-model campaign, raw records to CSV");
    int gw_n = 15;
    std::string gw_out = "wm_records.csv";
    gen_wm->add_option("--n", gw_n, "vertex count")->required();
    gen_wm->add_option("--out", gw_out, "records CSV path");
    add_common_flags(gen_wm, cfg);

    // dedup
    auto* dedup = app.add_subcommand("dedup", "drop isomorphic duplicates from record CSVs");
    std::vector<std::string> dd_in;
    std::string dd_out = "deduped.csv";
    dedup->add_option("--in", dd_in, "input records CSV (repeatable)")->required();
    dedup->add_option("--out", dd_out, "output records CSV");

    // merge
    auto* merge = app.add_subcommand("merge", "merge WM and CC records with global dedup");
    std::string mg_wm, mg_cc, mg_out = "merged.csv";
    merge->add_option("--wm", mg_wm, "WM records CSV")->required();
    merge->add_option("--cc", mg_cc, "CC records CSV")->required();
    merge->add_option("--out", mg_out, "output records CSV");

    // subsample
    auto* subsample = app.add_subcommand("subsample", "normality-driven per-bin subsampling");
    std::string ss_in, ss_out = "final.csv";
    subsample->add_option("--in", ss_in, "merged records CSV")->required();
    subsample->add_option("--out", ss_out, "output records CSV");
    add_common_flags(subsample, cfg);

    // report
    auto* report = app.add_subcommand("report", "emit analysis CSVs for a built library");
    std::string rp_dir;
    report->add_option("--library", rp_dir, "library directory")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "re-check every invariant of a built library");
    std::string vf_dir;
    verify->add_option("--library", vf_dir, "library directory")->required();

    // estimate
    auto* estimate = app.add_subcommand("estimate", "population-size extrapolation");
    std::vector<int> es_n;
    bool es_decimal = false;
    estimate->add_option("--n", es_n, "vertex counts (repeatable)")->required();
    estimate->add_flag("--decimal-log", es_decimal, "use the base-10 reading of the formula");

    // export / import
    auto* exp = app.add_subcommand("export", "pack a library into a zip archive");
    std::string ex_dir, ex_out = "library.zip";
    exp->add_option("--library", ex_dir, "library directory")->required();
    exp->add_option("--out", ex_out, "zip path");

    auto* imp = app.add_subcommand("import", "unpack a library archive");
    std::string im_zip, im_out = "library";
    imp->add_option("--zip", im_zip, "zip path")->required();
    imp->add_option("--out", im_out, "destination directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            cfg.n_list = build_n;
            cfg.out_dir = build_out;
            const auto data = build_library(cfg);
            for (const auto& lib : data.per_n)
                std::fprintf(stderr, "n=%d: %zu graphs in final library\n", lib.n,
                             lib.final_total());
            return 0;
        }
        if (*gen_cc) {
            const auto outcome = run_cc(cfg, gc_n);
            write_records_csv(gc_out, outcome.records);
            std::fprintf(stderr, "wrote %zu records (%d runs)\n", outcome.records.size(),
                         outcome.runs);
            return 0;
        }
        if (*gen_wm) {
            const auto outcome = run_wm(cfg, gw_n);
            write_records_csv(gw_out, outcome.records);
            std::fprintf(stderr, "wrote %zu records (%ld draws)\n", outcome.records.size(),
                         outcome.attempts);
            return 0;
        }
        if (*dedup) {
            std::vector<GraphRecord> all;
            for (const auto& path : dd_in) {
                auto part = read_records_csv(path);
                all.insert(all.end(), part.begin(), part.end());
            }
            if (all.empty()) {
                write_records_csv(dd_out, {});
                return 0;
            }
            const BinAssigner assigner = BinAssigner::make(all.front().n, all.front().k);
            const auto deduped = dedup_records(all, assigner);
            std::vector<GraphRecord> out;
            for (const auto& bin : deduped.bins)
                out.insert(out.end(), bin.begin(), bin.end());
            write_records_csv(dd_out, out);
            std::fprintf(stderr, "%zu records -> %zu classes\n", all.size(), out.size());
            return 0;
        }
        if (*merge) {
            const auto wm_records = read_records_csv(mg_wm);
            const auto cc_records = read_records_csv(mg_cc);
            if (wm_records.empty() && cc_records.empty()) {
                write_records_csv(mg_out, {});
                return 0;
            }
            const auto& probe = wm_records.empty() ? cc_records.front() : wm_records.front();
            const BinAssigner assigner = BinAssigner::make(probe.n, probe.k);
            const auto merged = merge_and_dedup(dedup_records(wm_records, assigner),
                                                dedup_records(cc_records, assigner));
            std::vector<GraphRecord> out;
            long overlap = 0;
            for (int b = 0; b < assigner.bin_count; ++b) {
                overlap += merged.stats.overlap[b];
                out.insert(out.end(), merged.sample.bins[b].begin(), merged.sample.bins[b].end());
            }
            write_records_csv(mg_out, out);
            std::fprintf(stderr, "%zu merged classes, %ld overlaps\n", out.size(), overlap);
            return 0;
        }
        if (*subsample) {
            const auto records = read_records_csv(ss_in);
            if (records.empty()) {
                write_records_csv(ss_out, {});
                return 0;
            }
            const BinAssigner assigner = BinAssigner::make(records.front().n, records.front().k);
            std::vector<std::vector<GraphRecord>> bins(assigner.bin_count);
            for (const auto& r : records)
                bins[r.bin >= 0 ? r.bin : assigner.assign(r.chi)].push_back(r);
            std::vector<GraphRecord> out;
            for (int b = 0; b < assigner.bin_count; ++b) {
                if (bins[b].empty()) continue;
                SubsampleParams params{cfg.batch_size, cfg.draws,        cfg.max_draws,
                                       cfg.p_threshold, cfg.cvm_null_draws,
                                       derive_seed(cfg.master_seed, 2, records.front().n, b)};
                const auto res = subsample_bin(bins[b], params);
                for (int i : res.chosen) out.push_back(bins[b][i]);
            }
            write_records_csv(ss_out, out);
            std::fprintf(stderr, "%zu records -> %zu final\n", records.size(), out.size());
            return 0;
        }
        if (*report) {
            write_reports(rp_dir);
            return 0;
        }
        if (*verify) {
            const int problems = verify_library(vf_dir, std::cerr);
            if (problems == 0) {
                std::fprintf(stderr, "verify: ok\n");
                return 0;
            }
            std::fprintf(stderr, "verify: %d problem(s)\n", problems);
            return 1;
        }
        if (*estimate) return cmd_estimate(es_n, es_decimal);
        if (*exp) {
            export_library(ex_dir, ex_out);
            return 0;
        }
        if (*imp) {
            import_library(im_zip, im_out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
