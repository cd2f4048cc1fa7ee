#include "bsat/biclique.hpp"

#include <algorithm>
#include <limits>

#include "bsat/bitrow.hpp"

namespace bsat {

namespace {

// C(m, k) clamped to avoid overflow; only used to pick the cheaper
// enumeration side.
std::uint64_t binom_capped(int m, int k) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > (std::numeric_limits<std::uint64_t>::max() >> 8) / static_cast<unsigned>(m))
            return std::numeric_limits<std::uint64_t>::max();
        r = r * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
    }
    return r;
}

// True iff some k-subset of pool (vertex ids on one side) has
// |base ∩ ⋂ rows| >= need, where row(w) and base live on the other side.
// Pool members with |row ∩ base| < need can never help and are filtered by
// the caller. Standard lexicographic subset walk with prefix intersections.
template <typename RowFn>
bool exists_completing_subset(const std::vector<int>& pool, int k,
                              std::span<const std::uint64_t> base, int need, RowFn row) {
    const int m = static_cast<int>(pool.size());
    if (k == 0) return bits::count(base) >= need || need <= 0;
    if (m < k) return false;

    const std::size_t words = base.size();
    // prefix[d] = base ∩ rows of the first d chosen vertices
    std::vector<std::uint64_t> prefix((k + 1) * words);
    std::copy(base.begin(), base.end(), prefix.begin());
    std::vector<int> idx(k);
    int d = 0;
    idx[0] = 0;
    while (d >= 0) {
        if (idx[d] > m - (k - d)) {  // no room for the remaining picks
            --d;
            if (d >= 0) ++idx[d];
            continue;
        }
        auto parent = std::span<const std::uint64_t>(prefix.data() + d * words, words);
        auto cur = std::span<std::uint64_t>(prefix.data() + (d + 1) * words, words);
        auto r = row(pool[idx[d]]);
        for (std::size_t i = 0; i < words; ++i) cur[i] = parent[i] & r[i];
        if (bits::count(cur) >= need) {
            if (d + 1 == k) return true;
            ++d;
            idx[d] = idx[d - 1] + 1;
        } else {
            ++idx[d];  // intersection can only shrink; skip this pick
        }
    }
    return false;
}

}  // namespace

std::optional<WitnessBiclique> contains_biclique(const BipartiteGraph& g, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("contains_biclique requires a,b >= 1");
    if (a > g.left_size() || b > g.right_size()) return std::nullopt;

    std::vector<int> cand;
    for (int u = 0; u < g.left_size(); ++u)
        if (g.left_degree(u) >= b) cand.push_back(u);
    const int m = static_cast<int>(cand.size());
    if (m < a) return std::nullopt;

    const std::size_t words = static_cast<std::size_t>(g.row_words());
    std::vector<std::uint64_t> prefix((a + 1) * words, ~std::uint64_t{0});
    // clear padding bits of the all-ones root so counts are exact
    {
        auto root = std::span<std::uint64_t>(prefix.data(), words);
        for (int v = g.right_size(); v < static_cast<int>(words) * bits::kWordBits; ++v)
            bits::reset(root, v);
    }
    std::vector<int> idx(a);
    int d = 0;
    idx[0] = 0;
    while (d >= 0) {
        if (idx[d] > m - (a - d)) {
            --d;
            if (d >= 0) ++idx[d];
            continue;
        }
        auto parent = std::span<const std::uint64_t>(prefix.data() + d * words, words);
        auto cur = std::span<std::uint64_t>(prefix.data() + (d + 1) * words, words);
        auto r = g.left_row(cand[idx[d]]);
        for (std::size_t i = 0; i < words; ++i) cur[i] = parent[i] & r[i];
        if (bits::count(cur) >= b) {
            if (d + 1 == a) {
                WitnessBiclique w;
                for (int i = 0; i < a; ++i) w.left.push_back(cand[idx[i]]);
                bits::for_each_bit(cur, [&](int v) {
                    if (static_cast<int>(w.right.size()) < b) w.right.push_back(v);
                });
                return w;
            }
            ++d;
            idx[d] = idx[d - 1] + 1;
        } else {
            ++idx[d];
        }
    }
    return std::nullopt;
}

bool creates_biclique_through(const BipartiteGraph& g, int u, int v, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("biclique classes must be >= 1");
    if (g.has_edge(u, v)) throw std::invalid_argument("creates: (u,v) is already an edge");
    if (a > g.left_size() || b > g.right_size()) return false;

    // base sets excluding the new edge's endpoints
    std::vector<std::uint64_t> base_r(g.left_row(u).begin(), g.left_row(u).end());
    bits::reset(base_r, v);
    std::vector<std::uint64_t> base_l(g.right_row(v).begin(), g.right_row(v).end());
    bits::reset(base_l, u);

    const int need_l = a - 1;  // additional left vertices, drawn from N(v)
    const int need_r = b - 1;  // additional right vertices, drawn from N(u)
    if (need_l == 0 && need_r == 0) return true;
    if (need_l == 0) return bits::count(base_r) >= need_r;
    if (need_r == 0) return bits::count(base_l) >= need_l;

    std::vector<int> pool_l, pool_r;
    bits::for_each_bit(std::span<const std::uint64_t>(base_l),
                       [&](int w) {
                           if (bits::count_and(g.left_row(w), base_r) >= need_r)
                               pool_l.push_back(w);
                       });
    bits::for_each_bit(std::span<const std::uint64_t>(base_r),
                       [&](int x) {
                           if (bits::count_and(g.right_row(x), base_l) >= need_l)
                               pool_r.push_back(x);
                       });

    // enumerate subsets on the side with the smaller binomial count
    if (binom_capped(static_cast<int>(pool_l.size()), need_l) <=
        binom_capped(static_cast<int>(pool_r.size()), need_r)) {
        return exists_completing_subset(pool_l, need_l, base_r, need_r,
                                        [&](int w) { return g.left_row(w); });
    }
    return exists_completing_subset(pool_r, need_r, base_l, need_l,
                                    [&](int x) { return g.right_row(x); });
}

bool creates_copy(const BipartiteGraph& g, int u, int v, const SatParams& params) {
    if (creates_biclique_through(g, u, v, params.s, params.t)) return true;
    if (params.orientation == Orientation::kUnordered && params.s != params.t)
        return creates_biclique_through(g, u, v, params.t, params.s);
    return false;
}

bool is_h_free(const BipartiteGraph& g, const SatParams& params) {
    if (contains_biclique(g, params.s, params.t)) return false;
    if (params.orientation == Orientation::kUnordered && params.s != params.t &&
        contains_biclique(g, params.t, params.s))
        return false;
    return true;
}

SaturationVerdict is_saturated(const BipartiteGraph& g, const SatParams& params) {
    if (auto w = contains_biclique(g, params.s, params.t))
        return {SaturationVerdict::Kind::kContainsCopy, std::move(w), std::nullopt};
    if (params.orientation == Orientation::kUnordered && params.s != params.t)
        if (auto w = contains_biclique(g, params.t, params.s))
            return {SaturationVerdict::Kind::kContainsCopy, std::move(w), std::nullopt};

    SaturationVerdict verdict{SaturationVerdict::Kind::kSaturated, std::nullopt, std::nullopt};
    for (int u = 0; u < g.left_size() && verdict.saturated(); ++u) {
        for (int v = 0; v < g.right_size(); ++v) {
            if (bits::test(g.left_row(u), v)) continue;
            if (!creates_copy(g, u, v, params)) {
                verdict = {SaturationVerdict::Kind::kMisses, std::nullopt, std::pair{u, v}};
                break;
            }
        }
    }
    return verdict;
}

ClosureResult closure(const BipartiteGraph& g, const SatParams& params) {
    ClosureResult res{g, {}};
    for (;;) {
        bool added = false;
        for (int u = 0; u < res.graph.left_size() && !added; ++u) {
            for (int v = 0; v < res.graph.right_size(); ++v) {
                if (bits::test(res.graph.left_row(u), v)) continue;
                if (creates_copy(res.graph, u, v, params)) {
                    res.graph.add_edge(u, v);
                    res.order.emplace_back(u, v);
                    added = true;
                    break;
                }
            }
        }
        if (!added) return res;
    }
}

WeakSatReport weak_saturation_report(const BipartiteGraph& g, const SatParams& params) {
    WeakSatReport r;
    r.seed_h_free = is_h_free(g, params);
    r.closure_complete = closure(g, params).graph.is_complete();
    r.weakly_saturated = r.seed_h_free && r.closure_complete;
    return r;
}

bool is_weakly_saturated(const BipartiteGraph& g, const SatParams& params) {
    return weak_saturation_report(g, params).weakly_saturated;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace

BipartiteGraph greedy_saturate(const BipartiteGraph& g, const SatParams& params,
                               std::uint64_t seed) {
    if (!is_h_free(g, params))
        throw std::invalid_argument("greedy_saturate: seed graph is not H-free");

    auto candidates = g.non_edges();
    // portable Fisher-Yates so a seed always means the same order
    SplitMix64 rng{seed};
    for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.next() % i]);

    BipartiteGraph result = g;
    for (auto [u, v] : candidates)
        if (!creates_copy(result, u, v, params)) result.add_edge(u, v);
    return result;
}

}  // namespace bsat
