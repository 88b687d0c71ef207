#include <doctest.h>

#include <set>

#include "regraph/generators.hpp"
#include "regraph/graph.hpp"
#include "regraph/rng.hpp"
#include "support.hpp"

using namespace regraph;

namespace {

Graph k5() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    return Graph(5, 4, edges);
}

Graph circulant10_12() {
    std::set<std::pair<int, int>> es;
    for (int v = 0; v < 10; ++v)
        for (int o : {1, 2}) es.insert(std::minmax(v, (v + o) % 10));
    return Graph(10, 4, {es.begin(), es.end()});
}

}  // namespace

TEST_CASE("graph construction validates structure") {
    CHECK_THROWS_AS(Graph(3, 2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, 2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, 2, {{0, 3}}), std::invalid_argument);
    const Graph g(4, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("degree_check") {
    CHECK(degree_check(cave_chain(10, 4)));
    CHECK(degree_check(circulant10_12()));

    // K5 with one edge removed: two vertices drop to degree 3
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
    CHECK(!degree_check(Graph(5, 4, edges)));
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cave_chain(10, 4)));
    CHECK(is_connected(circulant10_12()));

    // two disjoint K5s
    std::vector<std::pair<int, int>> edges;
    for (int base : {0, 5})
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) edges.emplace_back(base + i, base + j);
    CHECK(!is_connected(Graph(10, 4, edges)));
}

TEST_CASE("apply_swap rejects a duplicate created edge and keeps the input intact") {
    const Graph g = cave_chain(10, 4);
    const Graph copy = g;
    // 2-0 and 3-1 exist and get deleted; created edge 2-3 already exists
    const auto res = apply_swap(g, SwapProposal{2, 0, 3, 1});
    REQUIRE(std::holds_alternative<SwapReject>(res));
    CHECK(std::get<SwapReject>(res) == SwapReject::duplicate_edge);
    CHECK(g == copy);
}

TEST_CASE("apply_swap rejects self-loops and out-of-range ids") {
    const Graph g = cave_chain(10, 4);
    const auto res = apply_swap(g, SwapProposal{2, 0, 2, 1});
    REQUIRE(std::holds_alternative<SwapReject>(res));
    CHECK(std::get<SwapReject>(res) == SwapReject::self_loop);
    CHECK_THROWS_AS(apply_swap(g, SwapProposal{0, 1, 2, 10}), std::invalid_argument);
}

TEST_CASE("accepted swaps keep the graph k-regular and connected") {
    const Graph g = cave_chain(10, 4);
    Rng rng(7);
    int accepted = 0;
    for (int i = 0; i < 200 && accepted < 20; ++i) {
        const auto prop = propose_swap(g, rng);
        if (!std::holds_alternative<SwapProposal>(prop)) continue;
        const auto res = apply_swap(g, std::get<SwapProposal>(prop));
        if (!std::holds_alternative<Graph>(res)) continue;
        const Graph& h = std::get<Graph>(res);
        CHECK(degree_check(h));
        CHECK(is_connected(h));
        CHECK(h.edge_count() == g.edge_count());
        ++accepted;
    }
    CHECK(accepted == 20);
}

TEST_CASE("exhaustive swap check on the 10-vertex cave chain") {
    const Graph g = cave_chain(10, 4);
    const auto original_edges = g.edges();
    int accepted = 0;
    for (int x1 = 0; x1 < 10; ++x1)
        for (int x2 = 0; x2 < 10; ++x2)
            for (int x3 = 0; x3 < 10; ++x3)
                for (int x4 = 0; x4 < 10; ++x4) {
                    const auto res = apply_swap(g, SwapProposal{x1, x2, x3, x4});
                    if (!std::holds_alternative<Graph>(res)) continue;
                    ++accepted;
                    const Graph& h = std::get<Graph>(res);
                    CHECK(h.edge_count() == 20);
                    CHECK(degree_check(h));
                    CHECK(is_connected(h));
                    // if the deleted edges differ from the created ones as
                    // sets, the edge set must have changed
                    std::set<std::pair<int, int>> deleted, created;
                    if (g.adjacent(x1, x2)) deleted.insert(std::minmax(x1, x2));
                    if (g.adjacent(x3, x4)) deleted.insert(std::minmax(x3, x4));
                    created.insert(std::minmax(x1, x3));
                    created.insert(std::minmax(x2, x4));
                    if (deleted != created) CHECK(h.edges() != original_edges);
                }
    CHECK(accepted > 0);
}

TEST_CASE("propose_swap on K5 finds no third vertex") {
    Rng rng(1);
    const auto res = propose_swap(k5(), rng);
    REQUIRE(std::holds_alternative<SwapReject>(res));
    CHECK(std::get<SwapReject>(res) == SwapReject::no_candidates);
}

TEST_CASE("propose_swap is deterministic under a fixed seed") {
    const Graph g = cave_chain(10, 4);
    for (std::uint64_t seed : {1ULL, 99ULL}) {
        Rng a(seed), b(seed);
        for (int i = 0; i < 50; ++i) {
            const auto pa = propose_swap(g, a);
            const auto pb = propose_swap(g, b);
            REQUIRE(pa.index() == pb.index());
            if (std::holds_alternative<SwapProposal>(pa)) {
                const auto& sa = std::get<SwapProposal>(pa);
                const auto& sb = std::get<SwapProposal>(pb);
                CHECK(sa.x1 == sb.x1);
                CHECK(sa.x2 == sb.x2);
                CHECK(sa.x3 == sb.x3);
                CHECK(sa.x4 == sb.x4);
            }
        }
    }
}

TEST_CASE("proposals satisfy the selection invariants" * doctest::timeout(120)) {
    const Graph g = cave_chain(30, 4);
    Rng rng(2024);
    int produced = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto res = propose_swap(g, rng);
        if (!std::holds_alternative<SwapProposal>(res)) continue;
        const auto& p = std::get<SwapProposal>(res);
        ++produced;
        CHECK(g.adjacent(p.x1, p.x2));
        CHECK(!g.adjacent(p.x3, p.x1));
        CHECK(!g.adjacent(p.x3, p.x2));
        CHECK(p.x3 != p.x1);
        CHECK(p.x3 != p.x2);
        CHECK(p.x4 != p.x2);
        CHECK(g.adjacent(p.x3, p.x4));
    }
    CHECK(produced == 10000);  // cave chains always admit a proposal
}
