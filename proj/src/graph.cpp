#include "regraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "regraph/rng.hpp"

namespace regraph {

const char* to_string(SwapReject r) {
    switch (r) {
        case SwapReject::no_candidates: return "no_candidates";
        case SwapReject::degree: return "degree";
        case SwapReject::disconnected: return "disconnected";
        case SwapReject::self_loop: return "self_loop";
        case SwapReject::duplicate_edge: return "duplicate_edge";
    }
    return "?";
}

Graph::Graph(int n, int k, const std::vector<std::pair<int, int>>& edge_list)
    : n_(n), k_(k), words_((n + 63) / 64) {
    if (n <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
    if (k < 0) throw std::invalid_argument("Graph: degree must be non-negative");
    adj_.resize(n_);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (adjacent(u, v)) throw std::invalid_argument("Graph: duplicate edge");
        add_edge_unchecked(u, v);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] |= 1ULL << (u & 63);
    ++edge_count_;
}

void Graph::remove_edge_unchecked(int u, int v) {
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] &= ~(1ULL << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] &= ~(1ULL << (u & 63));
    --edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && k_ == other.k_ && bits_ == other.bits_;
}

bool degree_check(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(g.neighbors(v).size()) != g.degree()) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

SwapResult apply_swap(const Graph& g, const SwapProposal& p) {
    const int n = g.vertex_count();
    for (int x : {p.x1, p.x2, p.x3, p.x4})
        if (x < 0 || x >= n) throw std::invalid_argument("apply_swap: vertex id out of range");

    if (p.x1 == p.x3 || p.x2 == p.x4) return SwapReject::self_loop;

    Graph h = g;
    if (p.x1 != p.x2 && h.adjacent(p.x1, p.x2)) h.remove_edge_unchecked(p.x1, p.x2);
    if (p.x3 != p.x4 && h.adjacent(p.x3, p.x4)) h.remove_edge_unchecked(p.x3, p.x4);
    if (h.adjacent(p.x1, p.x3)) return SwapReject::duplicate_edge;
    h.add_edge_unchecked(p.x1, p.x3);
    if (h.adjacent(p.x2, p.x4)) return SwapReject::duplicate_edge;
    h.add_edge_unchecked(p.x2, p.x4);

    if (!degree_check(h)) return SwapReject::degree;
    if (!is_connected(h)) return SwapReject::disconnected;
    return h;
}

ProposalResult propose_swap(const Graph& g, Rng& rng) {
    const int n = g.vertex_count();
    const int x1 = rng.below_int(n);
    const auto& nb1 = g.neighbors(x1);
    if (nb1.empty()) return SwapReject::no_candidates;
    const int x2 = nb1[rng.below(nb1.size())];

    // Vertices adjacent to neither x1 nor x2. x1 and x2 exclude each other
    // (they are adjacent), so the set never contains them.
    std::vector<int> c3;
    c3.reserve(n);
    for (int v = 0; v < n; ++v)
        if (v != x1 && v != x2 && !g.adjacent(v, x1) && !g.adjacent(v, x2)) c3.push_back(v);
    if (c3.empty()) return SwapReject::no_candidates;
    const int x3 = c3[rng.below(c3.size())];

    // Neighbors of x3 other than x2, so the swapped-out edge {x3,x4} exists.
    // x1 is never a neighbor of x3 here, so x4 != x1 automatically.
    std::vector<int> c4;
    c4.reserve(g.neighbors(x3).size());
    for (int v : g.neighbors(x3))
        if (v != x2) c4.push_back(v);
    if (c4.empty()) return SwapReject::no_candidates;
    const int x4 = c4[rng.below(c4.size())];

    return SwapProposal{x1, x2, x3, x4};
}

}  // namespace regraph
