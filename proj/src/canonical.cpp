#include "bsat/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsat {

namespace {

constexpr int kMaxSide = 20;

// Finds the lexicographically greatest 0/1 matrix reachable by independent
// row and column permutations, read row-major. For a fixed row order the
// optimum column order sorts columns descending by their bit string from the
// top, which the ordered column groups maintain incrementally; the row order
// is found by DFS over rows with branch-and-bound against the best string so
// far. Exact by construction.
class Canonizer {
public:
    Canonizer(const BipartiteGraph& g) : nl_(g.left_size()), nr_(g.right_size()) {
        rows_.resize(nl_);
        for (int u = 0; u < nl_; ++u) {
            std::uint64_t m = 0;
            auto row = g.left_row(u);
            for (int v = 0; v < nr_; ++v)
                if (bits::test(row, v)) m |= std::uint64_t{1} << v;
            rows_[u] = m;
        }
    }

    std::vector<std::uint64_t> run() {
        best_.clear();
        have_best_ = false;
        std::vector<std::uint64_t> groups{nr_ == 64 ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << nr_) - 1};
        std::vector<int> remaining(nl_);
        for (int i = 0; i < nl_; ++i) remaining[i] = i;
        std::vector<std::uint64_t> emitted;
        dfs(groups, remaining, emitted, true);
        std::vector<std::uint64_t> key;
        key.reserve(2 + best_.size());
        key.push_back(static_cast<std::uint64_t>(nl_));
        key.push_back(static_cast<std::uint64_t>(nr_));
        key.insert(key.end(), best_.begin(), best_.end());
        return key;
    }

private:
    // Emitted pattern of row r under the current ordered groups: within each
    // group's span the 1s pack to the front. Column position p maps to bit
    // nr-1-p so numeric comparison equals string comparison.
    std::uint64_t pattern_of(std::uint64_t r, const std::vector<std::uint64_t>& groups) const {
        std::uint64_t pat = 0;
        int offset = 0;
        for (auto gmask : groups) {
            int size = std::popcount(gmask);
            int ones = std::popcount(gmask & r);
            for (int k = 0; k < ones; ++k)
                pat |= std::uint64_t{1} << (nr_ - 1 - (offset + k));
            offset += size;
        }
        return pat;
    }

    void dfs(const std::vector<std::uint64_t>& groups, const std::vector<int>& remaining,
             std::vector<std::uint64_t>& emitted, bool tight) {
        const int depth = static_cast<int>(emitted.size());
        if (remaining.empty()) {
            if (!have_best_ || !tight) {
                best_ = emitted;
                have_best_ = true;
            }
            return;
        }

        std::uint64_t node_max = 0;
        std::vector<std::pair<int, std::uint64_t>> cands;  // (row index, pattern)
        std::vector<std::uint64_t> seen_masks;
        for (int r : remaining) {
            if (std::find(seen_masks.begin(), seen_masks.end(), rows_[r]) != seen_masks.end())
                continue;  // identical rows are interchangeable
            seen_masks.push_back(rows_[r]);
            std::uint64_t pat = pattern_of(rows_[r], groups);
            node_max = std::max(node_max, pat);
            cands.emplace_back(r, pat);
        }

        if (tight && have_best_) {
            if (node_max < best_[depth]) return;
            if (node_max > best_[depth]) tight = false;
        }

        for (auto [r, pat] : cands) {
            if (pat != node_max) continue;
            std::vector<std::uint64_t> sub;
            sub.reserve(groups.size() * 2);
            for (auto gmask : groups) {
                if (auto in = gmask & rows_[r]) sub.push_back(in);
                if (auto out = gmask & ~rows_[r]) sub.push_back(out);
            }
            std::vector<int> rest;
            rest.reserve(remaining.size() - 1);
            for (int q : remaining)
                if (q != r) rest.push_back(q);
            emitted.push_back(pat);
            dfs(sub, rest, emitted, tight);
            emitted.pop_back();
            if (!tight && have_best_) tight = true;  // best_ now matches this prefix
        }
    }

    int nl_, nr_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> best_;
    bool have_best_ = false;
};

std::vector<std::uint64_t> fixed_key(const BipartiteGraph& g) { return Canonizer(g).run(); }

}  // namespace

CanonicalForm canonical_form(const BipartiteGraph& g, CanonMode mode) {
    if (g.left_size() > kMaxSide || g.right_size() > kMaxSide)
        throw std::invalid_argument("canonical_form: sides larger than " +
                                    std::to_string(kMaxSide) + " not supported");
    if (mode == CanonMode::kSwappableSides && g.left_size() != g.right_size())
        throw std::invalid_argument("canonical_form: swappable-sides requires a square graph");

    auto key = fixed_key(g);
    if (mode == CanonMode::kSwappableSides) {
        auto tkey = fixed_key(g.transposed());
        if (tkey > key) key = std::move(tkey);
    }
    return CanonicalForm{mode, std::move(key)};
}

BipartiteGraph graph_from_canonical_key(const std::vector<std::uint64_t>& key) {
    if (key.size() < 2) throw std::invalid_argument("canonical key too short");
    int nl = static_cast<int>(key[0]);
    int nr = static_cast<int>(key[1]);
    if (nl < 1 || nr < 1 || key.size() != static_cast<std::size_t>(2 + nl))
        throw std::invalid_argument("malformed canonical key");
    BipartiteGraph g(nl, nr);
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nr; ++v)
            if ((key[2 + u] >> (nr - 1 - v)) & 1) g.add_edge(u, v);
    return g;
}

}  // namespace bsat
