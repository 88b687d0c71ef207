#include "regraph/canon.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "regraph/graph6.hpp"

namespace regraph {

namespace {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a_u64(std::uint64_t v, std::uint64_t h) { return fnv1a(&v, sizeof v, h); }

// Equitable refinement: repeatedly recolor vertices by (color, sorted multiset
// of neighbor colors) until the number of color classes stops growing. Colors
// are dense ranks, so the cell order is isomorphism-invariant.
void refine(const Graph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.clear();
            s.push_back(color[v]);
            for (int w : g.neighbors(v)) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
            color[order[i]] = next;
        }
        if (next + 1 == classes) return;
        classes = next + 1;
    }
}

// Splits v off as the first singleton of its cell.
void individualize(std::vector<int>& color, int v) {
    const int c = color[v];
    for (int& cu : color) cu = cu * 2 + 1;
    color[v] = 2 * c;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::vector<int> run() {
        std::vector<int> color(n_, 0);
        // seed by degree so irregular inputs still canonicalize
        std::vector<int> degs(n_);
        for (int v = 0; v < n_; ++v) degs[v] = static_cast<int>(g_.neighbors(v).size());
        auto sorted = degs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n_; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) -
                                        sorted.begin());
        refine(g_, color);
        std::vector<int> prefix;
        search(color, prefix);
        return best_perm_;
    }

private:
    // Packed upper-triangle bits (graph6 column order, MSB first), so byte
    // comparison matches graph6 string comparison.
    std::vector<std::uint8_t> encode(const std::vector<int>& perm) const {
        std::vector<std::uint8_t> out((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8, 0);
        std::size_t bit = 0;
        for (int j = 1; j < n_; ++j) {
            for (int i = 0; i < j; ++i, ++bit) {
                if (g_.adjacent(perm[i], perm[j])) out[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
            }
        }
        return out;
    }

    static std::vector<int> perm_of(const std::vector<int>& color) {
        std::vector<int> perm(color.size());
        for (std::size_t v = 0; v < color.size(); ++v) perm[color[v]] = static_cast<int>(v);
        return perm;
    }

    void record_automorphism(const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> phi(n_);
        for (int i = 0; i < n_; ++i) phi[p[i]] = q[i];
        bool identity = true;
        for (int v = 0; v < n_ && identity; ++v) identity = phi[v] == v;
        if (identity) return;
        for (int u = 0; u < n_; ++u)
            for (int w : g_.neighbors(u))
                if (!g_.adjacent(phi[u], phi[w]))
                    throw std::logic_error("canonical_form: bad automorphism");
        if (std::find(gens_.begin(), gens_.end(), phi) == gens_.end() && gens_.size() < 128)
            gens_.push_back(std::move(phi));
    }

    void leaf(const std::vector<int>& color) {
        const auto perm = perm_of(color);
        auto bytes = encode(perm);
        if (first_perm_.empty()) {
            first_perm_ = perm;
            first_bytes_ = bytes;
            best_perm_ = perm;
            best_bytes_ = std::move(bytes);
            return;
        }
        if (bytes == first_bytes_) record_automorphism(first_perm_, perm);
        if (bytes == best_bytes_) {
            record_automorphism(best_perm_, perm);
        } else if (bytes < best_bytes_) {
            best_perm_ = perm;
            best_bytes_ = std::move(bytes);
        }
    }

    void search(const std::vector<int>& color, std::vector<int>& prefix) {
        // first cell (by color order) with more than one vertex
        int target = -1;
        {
            std::vector<int> count(n_, 0);
            for (int v = 0; v < n_; ++v) ++count[color[v]];
            for (int c = 0; c < n_; ++c) {
                if (count[c] > 1) {
                    target = c;
                    break;
                }
            }
        }
        if (target < 0) {
            leaf(color);
            return;
        }

        // orbit pruning: branch once per orbit of the generators that fix the
        // current prefix pointwise
        UnionFind uf(n_);
        for (const auto& phi : gens_) {
            bool fixes = true;
            for (int p : prefix) {
                if (phi[p] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) uf.unite(v, phi[v]);
        }

        std::vector<char> tried_root(n_, 0);
        for (int v = 0; v < n_; ++v) {
            if (color[v] != target) continue;
            const int root = uf.find(v);
            if (tried_root[root]) continue;
            tried_root[root] = 1;
            auto child = color;
            individualize(child, v);
            refine(g_, child);
            prefix.push_back(v);
            search(child, prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> best_perm_;
    std::vector<std::uint8_t> best_bytes_;
    std::vector<int> first_perm_;
    std::vector<std::uint8_t> first_bytes_;
    std::vector<std::vector<int>> gens_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) {
    const auto perm = canonical_labeling(g);
    std::vector<int> pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
    const Graph relabeled(g.vertex_count(), g.degree(), edges);
    CanonicalForm cf;
    cf.g6 = graph6_encode(relabeled);
    cf.digest = fnv1a(cf.g6.data(), cf.g6.size());
    return cf;
}

std::uint64_t fingerprint(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t h = fnv1a_u64(static_cast<std::uint64_t>(n), 0xcbf29ce484222325ULL);
    h = fnv1a_u64(static_cast<std::uint64_t>(g.degree()), h);

    // sorted local triangle counts
    std::vector<int> tri(n, 0);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (g.adjacent(nb[a], nb[b])) ++tri[v];
    }
    std::sort(tri.begin(), tri.end());
    for (int t : tri) h = fnv1a_u64(static_cast<std::uint64_t>(t), h);

    // pairwise distance histogram (unreachable pairs counted separately so
    // disconnected inputs fingerprint cleanly too)
    std::vector<std::int64_t> hist;
    std::int64_t unreachable = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                ++unreachable;
            } else if (dist[v] > 0) {
                if (static_cast<std::size_t>(dist[v]) > hist.size()) hist.resize(dist[v], 0);
                ++hist[dist[v] - 1];
            }
        }
    }
    for (std::int64_t c : hist) h = fnv1a_u64(static_cast<std::uint64_t>(c), h);
    h = fnv1a_u64(static_cast<std::uint64_t>(unreachable), h);
    return h;
}

const CanonicalForm& DedupIndex::canon_of(const Entry& e) const {
    if (!e.canon) e.canon = canonical_form(e.graph);
    return *e.canon;
}

bool DedupIndex::insert(const Graph& g) {
    const std::uint64_t fp = fingerprint(g);
    auto& bucket = buckets_[fp];
    if (!bucket.empty()) {
        const auto cf = canonical_form(g);
        for (const auto& entry : bucket)
            if (canon_of(entry) == cf) return false;
        bucket.push_back(Entry{g, cf});
    } else {
        bucket.push_back(Entry{g, std::nullopt});
    }
    ++count_;
    return true;
}

bool DedupIndex::contains(const Graph& g) const {
    const auto it = buckets_.find(fingerprint(g));
    if (it == buckets_.end()) return false;
    const auto cf = canonical_form(g);
    for (const auto& entry : it->second)
        if (canon_of(entry) == cf) return true;
    return false;
}

}  // namespace regraph
