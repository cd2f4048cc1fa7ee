#include "bsat/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace bsat {

int family_pad_size(int s, int t) { return (s + t - 2) / 2; }

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("construction spec: " + msg);
}

void check_anchor(const std::vector<int>& a, int s, int pad, const char* which) {
    require(static_cast<int>(a.size()) == s - 1,
            std::string(which) + " must have exactly s-1 vertices");
    std::set<int> seen;
    for (int v : a) {
        require(v >= 0 && v < pad, std::string(which) + " vertex out of the pad range");
        require(seen.insert(v).second, std::string(which) + " has repeated vertices");
    }
}

}  // namespace

ConstructionSpec resolve_spec(const ConstructionSpec& spec) {
    ConstructionSpec r = spec;
    require(r.s >= 1 && r.t >= r.s, "needs 1 <= s <= t");
    require(r.n >= 1, "needs n >= 1");
    require(r.l >= 1, "needs l >= 1");

    const int pad = family_pad_size(r.s, r.t);
    const int rem = r.n - pad;
    const int min_block = std::max(r.t - r.s, 1);
    require(rem >= static_cast<long long>(r.l) * min_block,
            "n too small to host " + std::to_string(r.l) + " blocks of size >= " +
                std::to_string(min_block));

    if (r.block_sizes.empty()) {
        r.block_sizes.assign(r.l, rem / r.l);
        for (int i = 0; i < rem % r.l; ++i) ++r.block_sizes[i];
    }
    require(static_cast<int>(r.block_sizes.size()) == r.l, "needs exactly l block sizes");
    for (int b : r.block_sizes)
        require(b >= min_block, "every block needs >= max(t-s,1) vertices");
    require(std::accumulate(r.block_sizes.begin(), r.block_sizes.end(), 0) == rem,
            "block sizes must sum to n - floor((s+t-2)/2)");

    if (r.anchor_right.empty() && r.s > 1)
        for (int v = 0; v < r.s - 1; ++v) r.anchor_right.push_back(v);
    check_anchor(r.anchor_right, r.s, pad, "anchor_right");

    if (r.anchors_left.empty()) {
        // rotate starts so blocks get distinct anchors whenever the pad allows
        for (int i = 0; i < r.l; ++i) {
            std::vector<int> a;
            for (int j = 0; j < r.s - 1; ++j) a.push_back((i + j) % pad);
            std::sort(a.begin(), a.end());
            r.anchors_left.push_back(std::move(a));
        }
    }
    require(static_cast<int>(r.anchors_left.size()) == r.l, "needs exactly l left anchors");
    for (const auto& a : r.anchors_left) check_anchor(a, r.s, pad, "anchors_left");

    if (r.regular_seeds.empty()) r.regular_seeds.assign(r.l, 0);
    require(static_cast<int>(r.regular_seeds.size()) == r.l, "needs exactly l regular seeds");
    return r;
}

BipartiteGraph build_family(const ConstructionSpec& spec) {
    const ConstructionSpec r = resolve_spec(spec);
    const int pad = family_pad_size(r.s, r.t);
    BipartiteGraph g(r.n, r.n);

    for (int u = 0; u < pad; ++u)
        for (int v = 0; v < pad; ++v) g.add_edge(u, v);

    int start = pad;
    for (int i = 0; i < r.l; ++i) {
        const int bsz = r.block_sizes[i];
        // union of t-s circulant matchings, rotated by the block seed
        const int shift = static_cast<int>(r.regular_seeds[i] % static_cast<unsigned>(bsz));
        for (int d = 0; d < r.t - r.s; ++d)
            for (int j = 0; j < bsz; ++j)
                g.add_edge(start + j, start + (j + d + shift) % bsz);
        for (int j = 0; j < bsz; ++j)
            for (int v : r.anchor_right) g.add_edge(start + j, v);
        for (int u : r.anchors_left[i])
            for (int j = 0; j < bsz; ++j) g.add_edge(u, start + j);
        start += bsz;
    }
    return g;
}

BipartiteGraph build_ordered_star(int s, int t, int n) {
    if (s < 1 || t < s) throw std::invalid_argument("build_ordered_star needs 1 <= s <= t");
    if (n < t) throw std::invalid_argument("build_ordered_star needs n >= t");
    BipartiteGraph g(n, n);
    for (int u = 0; u < s - 1; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, v);
    for (int v = 0; v < t - 1; ++v)
        for (int u = 0; u < n; ++u) g.add_edge(u, v);
    return g;
}

BipartiteGraph build_k23_extremal(int n) {
    if (n < 4) throw std::invalid_argument("build_k23_extremal needs n >= 4");
    BipartiteGraph g(n, n);
    for (int u = 0; u < n; ++u) g.add_edge(u, 0);
    for (int v = 1; v < n; ++v) {
        g.add_edge(v - 1, v);
        g.add_edge(v, v);
    }
    return g;
}

}  // namespace bsat
