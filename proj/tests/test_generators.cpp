#include <doctest.h>

#include <array>
#include <functional>
#include <map>
#include <set>

#include "regraph/canon.hpp"
#include "regraph/generators.hpp"
#include "regraph/graph6.hpp"
#include "regraph/metrics.hpp"
#include "regraph/rng.hpp"
#include "support.hpp"

using namespace regraph;

TEST_CASE("cave chain structure") {
    const Graph g = cave_chain(10, 4);
    CHECK(degree_check(g));
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 20);

    // per-cave local triangle counts: three vertices at 5 (coefficient 5/6),
    // the two opened ones at 3 (coefficient 1/2)
    std::map<int, int> counts;
    for (int v = 0; v < 10; ++v) {
        const auto& nb = g.neighbors(v);
        int t = 0;
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (g.adjacent(nb[a], nb[b])) ++t;
        ++counts[t];
    }
    CHECK(counts[5] == 6);
    CHECK(counts[3] == 4);

    for (int n : {15, 20, 25, 30, 45, 50}) {
        const Graph c = cave_chain(n, 4);
        CHECK(degree_check(c));
        CHECK(is_connected(c));
        CHECK(clustering_coefficient(c) == doctest::Approx(0.7).epsilon(1e-14));
    }
}

TEST_CASE("cave chain rejects invalid specs") {
    CHECK_THROWS_AS(cave_chain(12, 4), std::invalid_argument);  // not a multiple of k+1
    CHECK_THROWS_AS(cave_chain(5, 4), std::invalid_argument);   // single cave
    CHECK(CaveChainSpec{10, 4}.caves() == 2);
    CHECK(!CaveChainSpec{10, 3}.valid());
}

TEST_CASE("build_down_run honors caps and stays in the feasible range") {
    const BinAssigner assigner = BinAssigner::make(15, 4);
    const Graph start = cave_chain(15, 4);

    WalkConfig cfg;
    cfg.batch_cap = 0;
    CHECK(build_down_run(start, cfg, assigner).empty());

    cfg.batch_cap = 5;
    cfg.seed = 4242;
    const auto batch = build_down_run(start, cfg, assigner);
    CHECK(!batch.empty());
    std::vector<int> per_bin(assigner.bin_count, 0);
    DedupIndex iso;
    for (const auto& s : batch) {
        CHECK(degree_check(s.graph));
        CHECK(is_connected(s.graph));
        CHECK(s.chi >= 0.0);
        CHECK(s.chi <= max_clustering(4) + 1e-12);
        CHECK(s.bin == assigner.assign(s.chi));
        ++per_bin[s.bin];
        CHECK(iso.insert(s.graph));  // batch-local non-isomorphism
    }
    for (int c : per_bin) CHECK(c <= cfg.batch_cap);
}

TEST_CASE("build_down_run is deterministic under a fixed seed") {
    const BinAssigner assigner = BinAssigner::make(15, 4);
    const Graph start = cave_chain(15, 4);
    WalkConfig cfg;
    cfg.seed = 99;
    const auto a = build_down_run(start, cfg, assigner);
    const auto b = build_down_run(start, cfg, assigner);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].graph == b[i].graph);
        CHECK(a[i].bin == b[i].bin);
    }
}

TEST_CASE("uniform_regular basics") {
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        const Graph g = uniform_regular(5, 4, rng);
        CHECK(g.edge_count() == 10);  // K5 is the only simple 4-regular graph on 5 vertices
        CHECK(degree_check(g));
    }

    for (int i = 0; i < 2000; ++i) {
        const Graph g = uniform_regular(10, 4, rng);
        CHECK(degree_check(g));
        CHECK(is_connected(g));
    }

    CHECK_THROWS_AS(uniform_regular(5, 3, rng), std::invalid_argument);  // odd n*k
    CHECK_THROWS_AS(uniform_regular(4, 4, rng), std::invalid_argument);  // n <= k
    PairingConfig cap0{0};
    CHECK_THROWS_AS(uniform_regular(10, 4, rng, cap0), std::runtime_error);
}

TEST_CASE("uniform_regular is deterministic under a fixed seed") {
    Rng a(123), b(123);
    for (int i = 0; i < 20; ++i) CHECK(uniform_regular(12, 4, a) == uniform_regular(12, 4, b));
}

TEST_CASE("stub matchings are uniform: chi-squared against the 945 matchings" *
          doctest::timeout(300)) {
    // n=5, k=2: 10 stubs, 9!! = 945 perfect matchings
    std::vector<std::array<int, 10>> all;
    {
        std::array<int, 10> key{};
        std::vector<int> free{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        std::function<void(int)> rec = [&](int depth) {
            if (free.empty()) {
                all.push_back(key);
                return;
            }
            const int a = free.front();
            for (std::size_t i = 1; i < free.size(); ++i) {
                const int b = free[i];
                std::vector<int> rest;
                for (std::size_t j = 1; j < free.size(); ++j)
                    if (free[j] != b) rest.push_back(free[j]);
                key[2 * depth] = a;
                key[2 * depth + 1] = b;
                std::vector<int> saved = free;
                free = rest;
                rec(depth + 1);
                free = saved;
            }
        };
        rec(0);
    }
    REQUIRE(all.size() == 945);
    std::map<std::array<int, 10>, long> counts;
    for (const auto& m : all) counts[m] = 0;

    Rng rng(31415);
    const long draws = 94500;
    for (long d = 0; d < draws; ++d) {
        const auto pairs = draw_stub_matching(5, 2, rng);
        std::array<int, 10> key{};
        std::vector<std::pair<int, int>> sorted(pairs);
        for (auto& [a, b] : sorted)
            if (a > b) std::swap(a, b);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            key[2 * i] = sorted[i].first;
            key[2 * i + 1] = sorted[i].second;
        }
        auto it = counts.find(key);
        REQUIRE(it != counts.end());
        ++it->second;
    }
    const double expected = static_cast<double>(draws) / 945.0;
    double chi2 = 0.0;
    for (const auto& [key, c] : counts) {
        const double d = c - expected;
        chi2 += d * d / expected;
    }
    const double p = testsupport::chi2_tail(chi2, 944.0);
    CHECK(p > 0.01);
}

TEST_CASE("wm_campaign bins draws and leaves the high range empty") {
    const BinAssigner assigner = BinAssigner::make(15, 4);
    Rng rng(55);

    WmCampaignConfig empty_cfg;
    empty_cfg.count_target = 0;
    CHECK(wm_campaign(15, 4, empty_cfg, assigner, rng).empty());

    WmCampaignConfig cfg;
    cfg.count_target = 15000;
    cfg.per_bin_cap = 1000;
    const auto batch = wm_campaign(15, 4, cfg, assigner, rng);
    CHECK(!batch.empty());
    std::vector<int> per_bin(assigner.bin_count, 0);
    for (const auto& s : batch) {
        CHECK(s.chi <= max_clustering(4) + 1e-12);
        ++per_bin[s.bin];
    }
    for (int c : per_bin) CHECK(c <= cfg.per_bin_cap);
    // the pairing model concentrates at low chi; bins at or above 0.6 stay empty
    for (int b = assigner.assign(0.6); b < assigner.bin_count; ++b) CHECK(per_bin[b] == 0);
}
