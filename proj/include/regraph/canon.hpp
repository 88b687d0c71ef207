#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "regraph/graph.hpp"

namespace regraph {

/// Labeling-invariant identity of an isomorphism class: the graph6 string of
/// the canonically labeled graph, plus a 64-bit digest of it for indexing.
/// Equal forms <=> isomorphic graphs; digest equality is only necessary.
struct CanonicalForm {
    std::string g6;
    std::uint64_t digest = 0;

    bool operator==(const CanonicalForm& o) const { return digest == o.digest && g6 == o.g6; }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
};

/// Canonical form via iterated equitable partition refinement and a
/// backtracking search over individualizations, keeping the lexicographically
/// minimal adjacency encoding. Automorphisms discovered from coinciding
/// leaves prune symmetric branches, which keeps highly symmetric graphs
/// (cave chains, circulants) cheap.
CanonicalForm canonical_form(const Graph& g);

/// The canonical relabeling itself: position i holds the original vertex that
/// becomes vertex i. Exposed for tests.
std::vector<int> canonical_labeling(const Graph& g);

/// Cheap isomorphism-invariant prefilter: digest of (n, k, sorted local
/// triangle counts, pairwise distance histogram). Isomorphic graphs always
/// collide; most non-isomorphic pairs do not, so full canonical labeling is
/// usually skipped during dedup.
std::uint64_t fingerprint(const Graph& g);

/// Isomorphism-class dedup index. Buckets by fingerprint; canonical forms are
/// computed lazily, only when a bucket collision forces a real comparison.
/// Insertion is idempotent.
class DedupIndex {
public:
    /// True iff the class was not present. The class is stored either way.
    bool insert(const Graph& g);

    /// Membership test without insertion.
    bool contains(const Graph& g) const;

    std::size_t size() const { return count_; }

private:
    struct Entry {
        Graph graph;
        mutable std::optional<CanonicalForm> canon;
    };

    const CanonicalForm& canon_of(const Entry& e) const;

    std::unordered_map<std::uint64_t, std::vector<Entry>> buckets_;
    std::size_t count_ = 0;
};

}  // namespace regraph
