#include "regraph/report.hpp"

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include "regraph/library.hpp"
#include "regraph/manifest.hpp"
#include "regraph/metrics.hpp"

namespace fs = std::filesystem;

namespace regraph {

std::optional<long long> known_population_count(int n) {
    switch (n) {
        case 5: return 1;
        case 6: return 1;
        case 7: return 2;
        case 8: return 6;
        case 9: return 16;
        case 10: return 59;
        case 11: return 265;
        case 12: return 1544;
        case 13: return 10778;
        case 14: return 88168;
        case 15: return 805491;
        case 16: return 8037418;
        case 17: return 86221634;
        case 18: return 985870522;
        case 19: return 11946487647LL;
        case 20: return 159232459666LL;
        default: return std::nullopt;
    }
}

namespace {

std::vector<GraphRecord> load_raw(const std::string& dir, int n, const char* tag) {
    const fs::path p = fs::path(dir) / "raw" / ("n" + std::to_string(n) + "_" + tag + ".csv");
    if (!fs::exists(p)) return {};
    return read_records_csv(p.string());
}

}  // namespace

void write_reports(const std::string& dir) {
    const RunConfig cfg = read_config_json((fs::path(dir) / "config.json").string());
    const auto stats = read_bin_stats_csv((fs::path(dir) / "bins.csv").string());
    const auto manifest = read_manifest_csv((fs::path(dir) / "manifest.csv").string());
    const std::string report_dir = (fs::path(dir) / "report").string();
    fs::create_directories(report_dir);

    {
        std::vector<std::string> lines{"n,known_count,estimate_log10,estimate"};
        for (int n = 6; n <= 50; ++n) {
            std::ostringstream row;
            row << n << ',';
            if (const auto known = known_population_count(n))
                row << *known;
            else
                row << "NA";
            row << ',' << format_double6(population_estimate_log10(n)) << ','
                << population_estimate(n);
            lines.push_back(row.str());
        }
        write_lines((fs::path(report_dir) / "fig1_population.csv").string(), lines);
    }

    {
        std::vector<std::string> occupancy{"n,bin,chi_low,chi_high,source,raw,noniso"};
        std::vector<std::string> overlap{"n,bin,chi_low,chi_high,wm_only,cc_only,overlap"};
        std::vector<std::string> cvm{"n,bin,merged_size,final_size,cvm_merged,cvm_final"};
        std::vector<std::string> moments{
            "n,bin,merged_size,final_size,mean_merged,mean_final,std_merged,std_final,"
            "skew_merged,skew_final"};
        for (const auto& st : stats) {
            std::ostringstream pre;
            pre << st.n << ',' << st.bin << ',' << format_double6(st.chi_low) << ','
                << format_double6(st.chi_high);
            occupancy.push_back(pre.str() + ",WM," + std::to_string(st.wm_raw) + ',' +
                                std::to_string(st.wm_noniso));
            occupancy.push_back(pre.str() + ",CC," + std::to_string(st.cc_raw) + ',' +
                                std::to_string(st.cc_noniso));
            overlap.push_back(pre.str() + ',' + std::to_string(st.wm_only) + ',' +
                              std::to_string(st.cc_only) + ',' + std::to_string(st.overlap));
            std::ostringstream mid;
            mid << st.n << ',' << st.bin << ',' << st.merged << ',' << st.final_count;
            cvm.push_back(mid.str() + ',' + format_double6(st.before.cvm_p) + ',' +
                          format_double6(st.after.cvm_p));
            moments.push_back(mid.str() + ',' + format_double6(st.before.mean) + ',' +
                              format_double6(st.after.mean) + ',' + format_double6(st.before.std_dev) +
                              ',' + format_double6(st.after.std_dev) + ',' +
                              format_double6(st.before.skewness) + ',' +
                              format_double6(st.after.skewness));
        }
        write_lines((fs::path(report_dir) / "fig4_bin_occupancy.csv").string(), occupancy);
        write_lines((fs::path(report_dir) / "fig6_overlap.csv").string(), overlap);
        write_lines((fs::path(report_dir) / "fig7_11_cvm.csv").string(), cvm);
        write_lines((fs::path(report_dir) / "fig8_9_10_moments.csv").string(), moments);
    }

    // distance distributions need the merged samples: replay the dedup from
    // the raw records
    std::vector<std::string> fig5{"n,source,mean_distance"};
    std::vector<std::string> figs1{"n,bin,phase,mean_distance"};
    const long both_min = static_cast<long>(std::ceil(0.99 * cfg.target_per_bin));
    for (int n : cfg.n_list) {
        const BinAssigner assigner = BinAssigner::make(n, cfg.k);
        const auto wm = dedup_records(load_raw(dir, n, "wm"), assigner);
        const auto cc = dedup_records(load_raw(dir, n, "cc"), assigner);
        const auto merged = merge_and_dedup(wm, cc);
        for (int b = 0; b < assigner.bin_count; ++b) {
            const bool both_strong =
                static_cast<long>(wm.bins[b].size()) >= both_min &&
                static_cast<long>(cc.bins[b].size()) >= both_min;
            if (both_strong) {
                for (const auto& r : wm.bins[b])
                    fig5.push_back(std::to_string(n) + ",WM," + format_double6(r.mean_distance));
                for (const auto& r : cc.bins[b])
                    fig5.push_back(std::to_string(n) + ",CC," + format_double6(r.mean_distance));
            }
            for (const auto& r : merged.sample.bins[b])
                figs1.push_back(std::to_string(n) + ',' + std::to_string(b) + ",merged," +
                                format_double6(r.mean_distance));
        }
    }
    for (const auto& row : manifest)
        figs1.push_back(std::to_string(row.n) + ',' + std::to_string(row.bin) + ",final," +
                        format_double6(row.mean_distance));
    write_lines((fs::path(report_dir) / "fig5_distances.csv").string(), fig5);
    write_lines((fs::path(report_dir) / "figS1_distances.csv").string(), figs1);
}

}  // namespace regraph
