#include "bsat/search.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "bsat/canonical.hpp"

namespace bsat {

namespace {

using Key = std::vector<std::uint64_t>;

CanonMode mode_for(const SatParams& p) {
    // unordered saturation is side-swap invariant, so the coarser classes are
    // sound there; ordered mode must keep sides fixed
    return p.orientation == Orientation::kUnordered ? CanonMode::kSwappableSides
                                                    : CanonMode::kFixedSides;
}

struct ExpandStats {
    std::uint64_t generated = 0;
    std::uint64_t pruned = 0;
};

// All H-free one-edge extensions of the canonical representative of `key`,
// as canonical keys. Subgraphs of H-free graphs are H-free, so level-by-level
// growth from the empty graph reaches every H-free class exactly once.
void expand_key(const Key& key, const SatParams& params, CanonMode mode, std::set<Key>& out,
                ExpandStats& stats) {
    BipartiteGraph g = graph_from_canonical_key(key);
    g.for_each_non_edge([&](int u, int v) {
        if (creates_copy(g, u, v, params)) {
            ++stats.pruned;
            return;
        }
        BipartiteGraph g2 = g;
        g2.add_edge(u, v);
        ++stats.generated;
        out.insert(canonical_form(g2, mode).key);
    });
}

template <typename Predicate>
SearchOutcome run_level_search(int n, const SatParams& params, SearchOutcome::Mode mode,
                               int witness_cap, const SearchLimits& limits,
                               Predicate&& predicate) {
    if (n < 1) throw std::invalid_argument("search requires n >= 1");
    if (params.t > n) throw std::invalid_argument("search requires t <= n");
    if (n > limits.max_side) {
        double est = static_cast<double>(n) * n;
        throw SearchRefused("search refused: n=" + std::to_string(n) + " exceeds max side " +
                                std::to_string(limits.max_side) + " (roughly 2^" +
                                std::to_string(static_cast<long long>(est)) +
                                " labeled graphs before isomorph rejection); raise the limit "
                                "to force the run",
                            est);
    }

    const CanonMode cmode = mode_for(params);
    const int jobs = std::max(1, limits.jobs);

    // Theorem floor: no unordered-saturated graph sits below it (n >= t), so
    // those levels need no testing. Ordered saturation is a different
    // freeness notion, so no cutoff is assumed there.
    long long test_floor = 0;
    if (mode == SearchOutcome::Mode::kSat && params.orientation == Orientation::kUnordered)
        test_floor = std::max<long long>(0, theorem_lower(params.s, params.t, n));

    SearchOutcome out{mode, params, n, std::nullopt, {}, 0, 0, 0, 0};
    std::vector<Key> frontier{canonical_form(BipartiteGraph(n, n), cmode).key};

    for (long long m = 0;; ++m) {
        // test this level; workers only read disjoint slices and fill flags
        std::vector<char> hit(frontier.size(), 0);
        if (m >= test_floor) {
            auto test_range = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i)
                    hit[i] = predicate(graph_from_canonical_key(frontier[i])) ? 1 : 0;
            };
            if (jobs == 1 || frontier.size() < 2 * static_cast<std::size_t>(jobs)) {
                test_range(0, frontier.size());
            } else {
                std::vector<std::thread> pool;
                std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
                for (int j = 0; j < jobs; ++j) {
                    std::size_t lo = std::min(frontier.size(), j * chunk);
                    std::size_t hi = std::min(frontier.size(), lo + chunk);
                    if (lo < hi) pool.emplace_back(test_range, lo, hi);
                }
                for (auto& th : pool) th.join();
            }
            out.graphs_tested += frontier.size();
        }

        long long hits = std::count(hit.begin(), hit.end(), 1);
        if (hits > 0) {
            out.minimum = m;
            out.witness_count = hits;
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                if (!hit[i]) continue;
                if (static_cast<int>(out.witnesses.size()) >= witness_cap) break;
                out.witnesses.push_back(graph_from_canonical_key(frontier[i]));
            }
            return out;
        }

        // expand to the next edge level
        std::set<Key> next;
        if (jobs == 1 || frontier.size() < 2 * static_cast<std::size_t>(jobs)) {
            ExpandStats st;
            for (const auto& k : frontier) expand_key(k, params, cmode, next, st);
            out.graphs_generated += st.generated;
            out.pruned_not_free += st.pruned;
        } else {
            std::vector<std::set<Key>> locals(jobs);
            std::vector<ExpandStats> lstats(jobs);
            std::vector<std::thread> pool;
            std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
            for (int j = 0; j < jobs; ++j) {
                std::size_t lo = std::min(frontier.size(), j * chunk);
                std::size_t hi = std::min(frontier.size(), lo + chunk);
                if (lo >= hi) continue;
                pool.emplace_back([&, j, lo, hi] {
                    for (std::size_t i = lo; i < hi; ++i)
                        expand_key(frontier[i], params, cmode, locals[j], lstats[j]);
                });
            }
            for (auto& th : pool) th.join();
            for (int j = 0; j < jobs; ++j) {
                next.merge(locals[j]);  // set union: order of merging is immaterial
                out.graphs_generated += lstats[j].generated;
                out.pruned_not_free += lstats[j].pruned;
            }
        }
        if (out.graphs_generated > limits.max_generated)
            throw SearchRefused("search aborted: generated more than " +
                                    std::to_string(limits.max_generated) +
                                    " graphs; raise the budget to continue",
                                static_cast<double>(n) * n);
        if (next.empty()) return out;  // no H-free graphs at this size: minimum stays absent
        frontier.assign(next.begin(), next.end());
    }
}

}  // namespace

SearchOutcome search_sat(int n, const SatParams& params, int witness_cap,
                         const SearchLimits& limits) {
    return run_level_search(
        n, params, SearchOutcome::Mode::kSat, witness_cap, limits,
        [&](const BipartiteGraph& g) {
            // saturation forces degree >= s-1 on every vertex with a missing
            // edge; cheap rejection before the full check
            for (int u = 0; u < g.left_size(); ++u) {
                int d = g.left_degree(u);
                if (d < g.right_size() && d < params.s - 1) return false;
            }
            for (int v = 0; v < g.right_size(); ++v) {
                int d = g.right_degree(v);
                if (d < g.left_size() && d < params.s - 1) return false;
            }
            return is_saturated(g, params).saturated();
        });
}

SearchOutcome search_wsat(int n, const SatParams& params, const SearchLimits& limits) {
    SearchLimits wl = limits;
    wl.max_side = limits.wsat_max_side;
    return run_level_search(n, params, SearchOutcome::Mode::kWsat, 3, wl,
                            [&](const BipartiteGraph& g) {
                                return closure(g, params).graph.is_complete();
                            });
}

SatTable sat_table(const SatParams& params, int n_min, int n_max, const SearchLimits& limits) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("sat_table: bad n range");
    SatTable table;
    for (int n = n_min; n <= n_max; ++n) {
        try {
            SatTableRow row{n, search_sat(n, params, 3, limits),
                            bound_reports(params.s, params.t, n)};
            table.rows.push_back(std::move(row));
        } catch (const SearchRefused& e) {
            table.refused.emplace_back(n, e.what());
        } catch (const std::invalid_argument& e) {
            table.refused.emplace_back(n, e.what());
        }
    }
    return table;
}

}  // namespace bsat
