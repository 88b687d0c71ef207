#pragma once

#include <cstdint>
#include <vector>

#include "regraph/binning.hpp"
#include "regraph/graph.hpp"

namespace regraph {

class Rng;

/// Ring of m = n/(k+1) caves: each cave is a clique on k+1 vertices minus one
/// edge {a_i, b_i}; inter-cave edges a_i - b_{i+1 mod m}. k-regular, connected,
/// and attains the maximum clustering coefficient 1 - 6/(k(k+1)).
struct CaveChainSpec {
    int n = 0;
    int k = 0;

    int caves() const { return n / (k + 1); }
    bool valid() const { return n > 0 && k >= 2 && n % (k + 1) == 0 && caves() >= 2; }
};

Graph cave_chain(const CaveChainSpec& spec);
Graph cave_chain(int n, int k);

struct WalkConfig {
    int batch_cap = 20;       // max graphs per bin collected in one run
    int abort_limit = 500;    // consecutive steps without a deposit before the run ends
    std::uint64_t seed = 0;
    int target_per_bin = 1000;  // campaign-level raw target, used by callers
};

struct WalkSample {
    Graph graph;
    double chi;
    int bin;
};

/// One build-down run: walk by validity-checked edge swaps from `start`,
/// depositing each accepted, batch-locally-new graph into its chi bin until
/// every bin is full or abort_limit consecutive steps added nothing. A step
/// that fails (proposal/swap rejection, isomorphic to the batch, bin full)
/// leaves the walk where it was. bin_room, when given, overrides batch_cap
/// per bin so a campaign can pass remaining capacities.
std::vector<WalkSample> build_down_run(const Graph& start, const WalkConfig& cfg,
                                       const BinAssigner& binner,
                                       const std::vector<int>* bin_room = nullptr);

struct PairingConfig {
    int attempt_cap = 10000;  // matchings tried before giving up
};

/// Uniform perfect matching on the n*k stubs (stub id s belongs to vertex
/// s/k): Fisher-Yates shuffle paired off consecutively. This is the sampling
/// primitive behind uniform_regular, exposed so its uniformity is testable.
void draw_stub_matching(int n, int k, Rng& rng, std::vector<std::pair<int, int>>& out);
std::vector<std::pair<int, int>> draw_stub_matching(int n, int k, Rng& rng);

/// One simple connected k-regular graph from the pairing model: a uniform
/// stub matching, full rejection on self-loops, parallel edges, or
/// disconnectedness. Conditional on acceptance the draw is uniform over
/// simple connected k-regular labeled graphs.
/// Throws std::runtime_error after attempt_cap rejected matchings.
Graph uniform_regular(int n, int k, Rng& rng, const PairingConfig& cfg = {});

struct WmCampaignConfig {
    long count_target = 15000;  // accepted draws in total
    int per_bin_cap = 1000;     // raw deposits per bin
    PairingConfig pairing;
};

/// Batches uniform_regular draws into chi bins. Draws whose bin is already at
/// per_bin_cap are discarded but still count toward count_target. Stops early
/// when every bin is capped.
std::vector<WalkSample> wm_campaign(int n, int k, const WmCampaignConfig& cfg,
                                    const BinAssigner& binner, Rng& rng);

}  // namespace regraph
