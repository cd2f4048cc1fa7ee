#ifndef BSAT_CANONICAL_HPP
#define BSAT_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "bsat/bipartite_graph.hpp"

namespace bsat {

enum class CanonMode {
    kFixedSides,      // isomorphism under side-preserving vertex permutations
    kSwappableSides,  // additionally under exchanging the two sides (square only)
};

// Exact canonical key: two graphs get equal keys iff they are isomorphic in
// the requested mode. Layout: [n_left, n_right, one word per canonical row],
// where column position p of a row is bit (n_right-1-p), so word comparison
// matches string comparison of the 0/1 matrix.
struct CanonicalForm {
    CanonMode mode;
    std::vector<std::uint64_t> key;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.mode <=> b.mode; c != 0) return c;
        return a.key <=> b.key;
    }
};

// Exact (not hash-based); sides are capped at 20 since the cost is
// factorial-ish in the worst case. Throws std::invalid_argument beyond the
// cap or for swappable-sides on a non-square graph.
CanonicalForm canonical_form(const BipartiteGraph& g, CanonMode mode);

// Rebuild the canonical representative encoded in a key.
BipartiteGraph graph_from_canonical_key(const std::vector<std::uint64_t>& key);

}  // namespace bsat

#endif
