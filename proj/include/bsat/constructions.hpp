#ifndef BSAT_CONSTRUCTIONS_HPP
#define BSAT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "bsat/bipartite_graph.hpp"

namespace bsat {

// Parameters of the block family of extremal graphs. Each side splits into a
// complete pad V (resp. V') of size floor((s+t-2)/2) followed by l blocks
// W_1..W_l (resp. W_1'..W_l'); vertex indices lay the pad first, then blocks
// consecutively, identically on both sides.
struct ConstructionSpec {
    int s = 1;
    int t = 1;
    int n = 1;
    int l = 1;
    // l positive sizes summing to n - floor((s+t-2)/2), each >= t-s (>= 1 when
    // s == t). Empty selects an as-equal-as-possible split.
    std::vector<int> block_sizes;
    // S' in V', size s-1. Empty selects {0..s-2}.
    std::vector<int> anchor_right;
    // S_1..S_l in V, each size s-1. Empty selects rotated defaults, distinct
    // between blocks whenever |V| > s-1 allows it.
    std::vector<std::vector<int>> anchors_left;
    // Per-block rotation of the circulant matchings realizing the
    // (t-s)-regular graph inside W_i x W_i'. Empty selects zeros.
    std::vector<std::uint64_t> regular_seeds;
};

// floor((s+t-2)/2), the pad size |V| = |V'|.
int family_pad_size(int s, int t);

// Fully validated spec with defaults filled in; throws std::invalid_argument
// on any violated invariant.
ConstructionSpec resolve_spec(const ConstructionSpec& spec);

// Complete V x V', a (t-s)-regular circulant between each W_i and W_i',
// all of W_i x S' and S_i x W_i', nothing between different blocks.
// Edge count is exactly conjecture_value(s,t,n).
BipartiteGraph build_family(const ConstructionSpec& spec);

// s-1 left vertices and t-1 right vertices joined to everything opposite;
// ordered-(s,t)-saturated with n^2-(n-s+1)(n-t+1) edges. Requires n >= t.
BipartiteGraph build_ordered_star(int s, int t, int n);

// Right vertex 0 adjacent to all of U; right vertex j (j >= 1) adjacent to
// the consecutive pair {j-1, j}, so left degrees stay balanced. 3n-2 edges,
// unordered K_{2,3}-saturated. Requires n >= 4.
BipartiteGraph build_k23_extremal(int n);

}  // namespace bsat

#endif
