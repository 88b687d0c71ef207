#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace regraph {

class Rng;

enum class SwapReject {
    no_candidates,   // a selection step had an empty candidate set
    degree,          // swap broke k-regularity
    disconnected,    // swap disconnected the graph
    self_loop,       // a created edge would be a self-loop
    duplicate_edge,  // a created edge already exists
};

const char* to_string(SwapReject r);

/// One candidate double edge swap: delete {x1,x2} and {x3,x4}, create {x1,x3}
/// and {x2,x4}. propose_swap draws the vertices so that x2 ~ x1, x3 is adjacent
/// to neither x1 nor x2, and x4 ~ x3 with x4 != x2; apply_swap accepts arbitrary
/// vertex tuples and relies on its validity checks instead.
struct SwapProposal {
    int x1, x2, x3, x4;
};

/// Immutable simple undirected graph on n labeled vertices (0-based) with a
/// nominal uniform degree k. Adjacency is kept both as sorted neighbor lists
/// (O(k) iteration) and as an n x n bit table (O(1) adjacency tests).
/// Construction validates structure (ids, loops, duplicates); k-regularity
/// and connectivity are separate predicates, checked at sample admission.
class Graph {
public:
    Graph(int n, int k, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int degree() const { return k_; }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >>
                (v & 63)) & 1u;
    }

    /// All edges as pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    Graph() = default;

    void add_edge_unchecked(int u, int v);
    void remove_edge_unchecked(int u, int v);

    int n_ = 0;
    int k_ = 0;
    std::size_t edge_count_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;

    friend std::variant<Graph, SwapReject> apply_swap(const Graph& g, const SwapProposal& p);
};

using SwapResult = std::variant<Graph, SwapReject>;
using ProposalResult = std::variant<SwapProposal, SwapReject>;

/// True iff every vertex has degree exactly g.degree().
bool degree_check(const Graph& g);

/// True iff a BFS from vertex 0 reaches all vertices.
bool is_connected(const Graph& g);

/// Executes the swap on a copy: deletes {x1,x2} and {x3,x4} where present,
/// creates {x1,x3} and {x2,x4}. Rejects (input untouched) if a created edge
/// would be a self-loop or already exists after the deletions, if the result
/// is not k-regular, or if it is disconnected.
SwapResult apply_swap(const Graph& g, const SwapProposal& p);

/// Draws a proposal uniformly at each selection step from the eligible set,
/// using only the provided stream. Returns no_candidates when a step has no
/// eligible vertex (e.g. on near-complete graphs).
ProposalResult propose_swap(const Graph& g, Rng& rng);

}  // namespace regraph
