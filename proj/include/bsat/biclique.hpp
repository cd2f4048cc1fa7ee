#ifndef BSAT_BICLIQUE_HPP
#define BSAT_BICLIQUE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bsat/bipartite_graph.hpp"

namespace bsat {

enum class Orientation {
    kOrdered,    // the s-class must lie on the left side: target K_{(s,t)}
    kUnordered,  // target K_{(s,t)} or K_{(t,s)}
};

struct SatParams {
    int s;
    int t;
    Orientation orientation;

    SatParams(int s_, int t_, Orientation o) : s(s_), t(t_), orientation(o) {
        if (s < 1 || t < s) throw std::invalid_argument("SatParams requires 1 <= s <= t");
    }
    static SatParams ordered(int s, int t) { return {s, t, Orientation::kOrdered}; }
    static SatParams unordered(int s, int t) { return {s, t, Orientation::kUnordered}; }

    friend bool operator==(const SatParams&, const SatParams&) = default;
};

// A claimed complete biclique: every pair in left x right is an edge of the
// graph the witness was issued against.
struct WitnessBiclique {
    std::vector<int> left;
    std::vector<int> right;
};

// First K_{(a,b)} (a on the left) in deterministic order, or absent.
// a > n_left etc. simply yields absent.
std::optional<WitnessBiclique> contains_biclique(const BipartiteGraph& g, int a, int b);

// Does adding the non-edge (u,v) create a K_{(a,b)} containing it, with u in
// the a-class and v in the b-class? Oriented low-level form with no s<=t
// constraint. Throws if (u,v) is already an edge.
bool creates_biclique_through(const BipartiteGraph& g, int u, int v, int a, int b);

// The saturation rule: true iff g+uv contains a new copy through uv, where
// the target is K_{(s,t)} in ordered mode and either orientation in
// unordered mode.
bool creates_copy(const BipartiteGraph& g, int u, int v, const SatParams& params);

// No copy of the target in the required orientation(s).
bool is_h_free(const BipartiteGraph& g, const SatParams& params);

struct SaturationVerdict {
    enum class Kind { kSaturated, kContainsCopy, kMisses };
    Kind kind;
    std::optional<WitnessBiclique> witness;             // set for kContainsCopy
    std::optional<std::pair<int, int>> missing_edge;    // set for kMisses

    bool saturated() const { return kind == Kind::kSaturated; }
};

// Saturated iff H-free and every non-edge creates a copy; otherwise returns
// the first failing certificate.
SaturationVerdict is_saturated(const BipartiteGraph& g, const SatParams& params);

// Bootstrap-percolation closure: repeatedly add any non-edge whose addition
// creates a copy through itself, until none exists. The final graph is
// order-independent; the returned activation order is first-eligible under
// row-major rescans.
struct ClosureResult {
    BipartiteGraph graph;
    std::vector<std::pair<int, int>> order;
};
ClosureResult closure(const BipartiteGraph& g, const SatParams& params);

struct WeakSatReport {
    bool seed_h_free;
    bool closure_complete;
    bool weakly_saturated;  // both of the above
};
WeakSatReport weak_saturation_report(const BipartiteGraph& g, const SatParams& params);
bool is_weakly_saturated(const BipartiteGraph& g, const SatParams& params);

// Maximal H-free completion: visits non-edges in a seed-determined random
// order and adds each edge that keeps the graph H-free. The result is
// H-saturated. Throws std::invalid_argument if g is not H-free.
BipartiteGraph greedy_saturate(const BipartiteGraph& g, const SatParams& params,
                               std::uint64_t seed);

}  // namespace bsat

#endif
