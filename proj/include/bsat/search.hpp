#ifndef BSAT_SEARCH_HPP
#define BSAT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsat/biclique.hpp"
#include "bsat/bipartite_graph.hpp"
#include "bsat/bounds.hpp"

namespace bsat {

struct SearchLimits {
    // Side cap before the enumeration is even attempted; raise explicitly
    // for bigger (slow) runs. Weak-saturation search pays a closure per
    // candidate, hence its tighter default.
    int max_side = 5;
    int wsat_max_side = 4;
    // Abort once this many graphs have been generated.
    std::uint64_t max_generated = std::uint64_t{1} << 26;
    // Worker threads for level expansion and testing. The outcome is
    // bit-identical for every value.
    int jobs = 1;
};

class SearchRefused : public std::runtime_error {
public:
    SearchRefused(const std::string& what, double est_log2_nodes)
        : std::runtime_error(what), est_log2_nodes_(est_log2_nodes) {}
    double est_log2_nodes() const noexcept { return est_log2_nodes_; }

private:
    double est_log2_nodes_;
};

struct SearchOutcome {
    enum class Mode { kSat, kWsat };
    Mode mode;
    SatParams params;
    int n;
    // Least edge count among all graphs on the host satisfying the predicate;
    // absent when no such graph exists.
    std::optional<long long> minimum;
    // Canonical representatives at the minimum, up to the requested cap.
    std::vector<BipartiteGraph> witnesses;
    // All minimum witnesses (canonical classes), not capped.
    long long witness_count = 0;
    std::uint64_t graphs_tested = 0;
    std::uint64_t graphs_generated = 0;
    std::uint64_t pruned_not_free = 0;
};

// Exact minimum edge count of an (s,t)-saturated n-by-n graph, by
// isomorph-free orderly enumeration of H-free graphs level by level
// (fixed-sides canonical keys in ordered mode, swappable-sides in
// unordered mode). Throws SearchRefused on infeasible sizes.
SearchOutcome search_sat(int n, const SatParams& params, int witness_cap = 3,
                         const SearchLimits& limits = {});

// Exact minimum size of an H-free seed whose closure is complete.
SearchOutcome search_wsat(int n, const SatParams& params, const SearchLimits& limits = {});

struct SatTableRow {
    int n;
    SearchOutcome outcome;
    std::vector<BoundReport> bounds;  // formula values at this (s,t,n)
};

// Runs search_sat for each n in [n_min, n_max]; rows whose search is refused
// carry the refusal message instead of an outcome.
struct SatTable {
    std::vector<SatTableRow> rows;
    std::vector<std::pair<int, std::string>> refused;  // (n, reason)
};
SatTable sat_table(const SatParams& params, int n_min, int n_max,
                   const SearchLimits& limits = {});

}  // namespace bsat

#endif
