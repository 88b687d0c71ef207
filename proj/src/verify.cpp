#include "regraph/verify.hpp"

#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "regraph/canon.hpp"
#include "regraph/graph6.hpp"
#include "regraph/manifest.hpp"
#include "regraph/metrics.hpp"

namespace fs = std::filesystem;

namespace regraph {

int verify_library(const std::string& dir, std::ostream& diag) {
    int problems = 0;
    auto fail = [&](const std::string& msg) {
        diag << "verify: " << msg << '\n';
        ++problems;
    };

    RunConfig cfg;
    std::vector<GraphRecord> manifest;
    std::vector<BinStats> stats;
    try {
        cfg = read_config_json((fs::path(dir) / "config.json").string());
        manifest = read_manifest_csv((fs::path(dir) / "manifest.csv").string());
        stats = read_bin_stats_csv((fs::path(dir) / "bins.csv").string());
    } catch (const std::exception& e) {
        fail(e.what());
        return problems;
    }

    std::map<std::pair<int, int>, long> manifest_counts;  // (n, bin) -> rows
    std::map<int, std::set<std::string>> ids_by_n;

    for (const auto& row : manifest) {
        const std::string where = "n=" + std::to_string(row.n) + " bin=" + std::to_string(row.bin) +
                                  " id=" + row.canonical_id;
        ++manifest_counts[{row.n, row.bin}];
        if (!ids_by_n[row.n].insert(row.canonical_id).second)
            fail("duplicate isomorphism class: " + where);

        Graph g(1, 0, {});
        try {
            g = graph6_decode(row.canonical_id);
        } catch (const std::exception& e) {
            fail("undecodable canonical id (" + where + "): " + e.what());
            continue;
        }
        if (graph6_encode(g) != row.canonical_id) {
            fail("graph6 round trip failed: " + where);
            continue;
        }
        if (g.vertex_count() != row.n || g.degree() != row.k) {
            fail("n/k mismatch: " + where);
            continue;
        }
        if (!degree_check(g)) {
            fail("not k-regular: " + where);
            continue;
        }
        if (!is_connected(g)) {
            fail("disconnected: " + where);
            continue;
        }
        if (canonical_form(g).g6 != row.canonical_id)
            fail("stored labeling is not canonical: " + where);

        const double chi = clustering_coefficient(g);
        const double md = mean_graph_distance(g);
        if (std::abs(chi - row.chi) > 1e-6) fail("chi mismatch: " + where);
        if (std::abs(md - row.mean_distance) > 1e-6) fail("mean distance mismatch: " + where);
        if (chi > max_clustering(row.k) + 1e-12) fail("chi above feasible maximum: " + where);

        const BinAssigner assigner = BinAssigner::make(row.n, row.k);
        if (assigner.assign(chi) != row.bin) fail("bin assignment mismatch: " + where);
        if (chi < assigner.low(row.bin) - 1e-9 || chi > assigner.high(row.bin) + 1e-9)
            fail("chi outside bin interval: " + where);
    }

    std::map<std::pair<int, int>, const BinStats*> stats_by_bin;
    for (const auto& st : stats) {
        stats_by_bin[{st.n, st.bin}] = &st;
        const std::string where = "n=" + std::to_string(st.n) + " bin=" + std::to_string(st.bin);
        if (st.final_count > cfg.batch_size) fail("final bin above batch size: " + where);
        if (st.final_count > st.merged) fail("final bin larger than merged bin: " + where);
        if (st.merged <= cfg.batch_size && st.final_count != st.merged)
            fail("small bin was subsampled: " + where);

        const long expected = manifest_counts.count({st.n, st.bin})
                                  ? manifest_counts[{st.n, st.bin}]
                                  : 0;
        if (expected != st.final_count)
            fail("manifest row count disagrees with bins.csv: " + where);

        const BinAssigner assigner = BinAssigner::make(st.n, cfg.k);
        const std::string bin_path =
            (fs::path(dir) / ("n" + std::to_string(st.n)) / bin_file_name(assigner, st.bin))
                .string();
        if (st.final_count == 0) {
            if (fs::exists(bin_path)) fail("unexpected bin file for empty bin: " + where);
            continue;
        }
        if (!fs::exists(bin_path)) {
            fail("missing bin file: " + bin_path);
            continue;
        }
        const auto lines = read_lines(bin_path);
        if (static_cast<long>(lines.size()) != st.final_count)
            fail("bin file line count disagrees with bins.csv: " + where);
    }

    for (const auto& [key, count] : manifest_counts) {
        if (!stats_by_bin.count(key))
            fail("manifest rows for a bin missing from bins.csv: n=" + std::to_string(key.first) +
                 " bin=" + std::to_string(key.second));
    }

    // bin file lines must match the manifest's ids exactly
    std::map<std::pair<int, int>, std::set<std::string>> manifest_ids;
    for (const auto& row : manifest) manifest_ids[{row.n, row.bin}].insert(row.canonical_id);
    for (const auto& [key, ids] : manifest_ids) {
        const BinAssigner assigner = BinAssigner::make(key.first, cfg.k);
        const std::string bin_path =
            (fs::path(dir) / ("n" + std::to_string(key.first)) / bin_file_name(assigner, key.second))
                .string();
        if (!fs::exists(bin_path)) {
            fail("missing bin file: " + bin_path);
            continue;
        }
        const auto lines = read_lines(bin_path);
        std::set<std::string> file_ids(lines.begin(), lines.end());
        if (file_ids != ids)
            fail("bin file contents disagree with manifest: n=" + std::to_string(key.first) +
                 " bin=" + std::to_string(key.second));
    }

    return problems;
}

}  // namespace regraph
