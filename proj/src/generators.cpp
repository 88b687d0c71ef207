#include "regraph/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "regraph/canon.hpp"
#include "regraph/metrics.hpp"
#include "regraph/rng.hpp"

namespace regraph {

Graph cave_chain(const CaveChainSpec& spec) {
    if (!spec.valid())
        throw std::invalid_argument("cave_chain: n must be a multiple of k+1 with at least 2 caves");
    const int m = spec.caves();
    const int cave = spec.k + 1;
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < m; ++c) {
        const int base = c * cave;
        const int a = base, b = base + 1;
        for (int i = 0; i < cave; ++i) {
            for (int j = i + 1; j < cave; ++j) {
                if (base + i == a && base + j == b) continue;  // the missing edge
                edges.emplace_back(base + i, base + j);
            }
        }
    }
    for (int c = 0; c < m; ++c) {
        const int a = c * cave;
        const int b_next = ((c + 1) % m) * cave + 1;
        edges.emplace_back(a, b_next);
    }
    return Graph(spec.n, spec.k, edges);
}

Graph cave_chain(int n, int k) { return cave_chain(CaveChainSpec{n, k}); }

std::vector<WalkSample> build_down_run(const Graph& start, const WalkConfig& cfg,
                                       const BinAssigner& binner,
                                       const std::vector<int>* bin_room) {
    if (cfg.abort_limit <= 0) throw std::invalid_argument("build_down_run: abort_limit must be positive");
    std::vector<int> room(binner.bin_count, std::max(0, cfg.batch_cap));
    if (bin_room) {
        if (static_cast<int>(bin_room->size()) != binner.bin_count)
            throw std::invalid_argument("build_down_run: bin_room size mismatch");
        room = *bin_room;
    }

    std::vector<WalkSample> batch;
    auto all_full = [&] {
        for (int r : room)
            if (r > 0) return false;
        return true;
    };
    if (all_full()) return batch;

    Rng rng(cfg.seed);
    Graph current = start;
    DedupIndex batch_index;
    int aborts = 0;

    while (aborts < cfg.abort_limit && !all_full()) {
        const auto proposal = propose_swap(current, rng);
        if (std::holds_alternative<SwapReject>(proposal)) {
            ++aborts;
            continue;
        }
        auto swapped = apply_swap(current, std::get<SwapProposal>(proposal));
        if (std::holds_alternative<SwapReject>(swapped)) {
            ++aborts;
            continue;
        }
        Graph next = std::move(std::get<Graph>(swapped));
        if (!batch_index.insert(next)) {
            ++aborts;
            continue;
        }
        const double chi = clustering_coefficient(next);
        const int bin = binner.assign(chi);
        if (room[bin] > 0) {
            --room[bin];
            batch.push_back(WalkSample{next, chi, bin});
            aborts = 0;
        } else {
            ++aborts;
        }
        current = std::move(next);
    }
    return batch;
}

void draw_stub_matching(int n, int k, Rng& rng, std::vector<std::pair<int, int>>& out) {
    const std::size_t stubs = static_cast<std::size_t>(n) * k;
    static thread_local std::vector<int> ids;
    ids.resize(stubs);
    std::iota(ids.begin(), ids.end(), 0);
    // Fisher-Yates; a uniform shuffle paired off consecutively is a uniform
    // perfect matching on the stubs.
    for (std::size_t i = stubs - 1; i > 0; --i) {
        const std::size_t j = rng.below(i + 1);
        std::swap(ids[i], ids[j]);
    }
    out.clear();
    out.reserve(stubs / 2);
    for (std::size_t i = 0; i + 1 < stubs; i += 2) out.emplace_back(ids[i], ids[i + 1]);
}

std::vector<std::pair<int, int>> draw_stub_matching(int n, int k, Rng& rng) {
    std::vector<std::pair<int, int>> out;
    draw_stub_matching(n, k, rng, out);
    return out;
}

Graph uniform_regular(int n, int k, Rng& rng, const PairingConfig& cfg) {
    if (n <= k) throw std::invalid_argument("uniform_regular: need n > k");
    if ((static_cast<long>(n) * k) % 2 != 0)
        throw std::invalid_argument("uniform_regular: n*k must be even");

    std::vector<std::pair<int, int>> matching;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * k / 2);
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (int attempt = 0; attempt < cfg.attempt_cap; ++attempt) {
        draw_stub_matching(n, k, rng, matching);
        edges.clear();
        bool simple = true;
        for (const auto& [a, b] : matching) {
            const int u = a / k, v = b / k;
            if (u == v || seen[static_cast<std::size_t>(u) * n + v]) {
                simple = false;
                break;
            }
            seen[static_cast<std::size_t>(u) * n + v] = 1;
            seen[static_cast<std::size_t>(v) * n + u] = 1;
            edges.emplace_back(u, v);
        }
        for (const auto& [u, v] : edges) {
            seen[static_cast<std::size_t>(u) * n + v] = 0;
            seen[static_cast<std::size_t>(v) * n + u] = 0;
        }
        if (!simple) continue;
        Graph g(n, k, edges);
        if (!is_connected(g)) continue;
        return g;
    }
    throw std::runtime_error("uniform_regular: retry_exhausted after " +
                             std::to_string(cfg.attempt_cap) + " matchings");
}

std::vector<WalkSample> wm_campaign(int n, int k, const WmCampaignConfig& cfg,
                                    const BinAssigner& binner, Rng& rng) {
    std::vector<WalkSample> out;
    std::vector<int> room(binner.bin_count, cfg.per_bin_cap);
    auto all_full = [&] {
        for (int r : room)
            if (r > 0) return false;
        return true;
    };
    for (long drawn = 0; drawn < cfg.count_target && !all_full(); ++drawn) {
        Graph g = uniform_regular(n, k, rng, cfg.pairing);
        const double chi = clustering_coefficient(g);
        const int bin = binner.assign(chi);
        if (room[bin] > 0) {
            --room[bin];
            out.push_back(WalkSample{std::move(g), chi, bin});
        }
    }
    return out;
}

}  // namespace regraph
