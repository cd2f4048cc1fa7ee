#include "bsat/decomposition.hpp"

#include <algorithm>

#include "bsat/bitrow.hpp"
#include "bsat/bounds.hpp"

namespace bsat {

namespace {

void require_square(const BipartiteGraph& g) {
    if (g.left_size() != g.right_size())
        throw std::invalid_argument("decomposition requires an n-by-n host");
}

std::vector<std::uint64_t> mask_of(const std::vector<int>& verts, int nbits) {
    std::vector<std::uint64_t> m(bits::words_for(nbits), 0);
    for (int v : verts) bits::set(m, v);
    return m;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool core_valid(const BipartiteGraph& g, const CoreSpec& core) {
    const int nl = g.left_size(), nr = g.right_size();
    if (core.u0 < 0 || core.u0 >= nl || core.u0p < 0 || core.u0p >= nr) return false;
    for (int v : core.a0)
        if (v < 0 || v >= nl) return false;
    for (int v : core.a0p)
        if (v < 0 || v >= nr) return false;
    if (g.has_edge(core.u0, core.u0p)) return false;
    auto a0 = mask_of(core.a0, nl);
    auto a0p = mask_of(core.a0p, nr);
    if (!bits::test(a0, core.u0) || !bits::test(a0p, core.u0p)) return false;
    // both distinguished neighborhoods must sit inside the core
    if (!bits::is_subset(g.left_row(core.u0), a0p)) return false;
    if (!bits::is_subset(g.right_row(core.u0p), a0)) return false;
    return true;
}

std::optional<CoreSpec> find_core(const BipartiteGraph& g, const SatParams& params) {
    require_square(g);
    const int n = g.left_size();
    const int thr = params.s + params.t - 3;
    for (int u0 = 0; u0 < n; ++u0) {
        if (g.left_degree(u0) > thr) continue;
        for (int u0p = 0; u0p < n; ++u0p) {
            if (g.right_degree(u0p) > thr) continue;
            if (g.has_edge(u0, u0p)) continue;
            CoreSpec core;
            core.u0 = u0;
            core.u0p = u0p;
            core.a0.push_back(u0);
            bits::for_each_bit(g.right_row(u0p), [&](int w) { core.a0.push_back(w); });
            core.a0p.push_back(u0p);
            bits::for_each_bit(g.left_row(u0), [&](int w) { core.a0p.push_back(w); });
            core.a0 = sorted_unique(std::move(core.a0));
            core.a0p = sorted_unique(std::move(core.a0p));
            return core;
        }
    }
    return std::nullopt;
}

ShellResult shell_closure(const BipartiteGraph& g, const CoreSpec& core, int t) {
    require_square(g);
    if (!core_valid(g, core)) throw std::invalid_argument("shell_closure: invalid core");
    const int n = g.left_size();
    auto in_a = mask_of(core.a0, n);
    auto in_ap = mask_of(core.a0p, n);

    ShellResult res;
    for (;;) {
        int joined = -1;
        bool joined_right = false;
        for (int v = 0; v < n && joined < 0; ++v) {
            if (bits::test(in_a, v)) continue;
            if (bits::count_and(g.left_row(v), in_ap) >= t - 1) joined = v;
        }
        if (joined < 0) {
            for (int v = 0; v < n && joined < 0; ++v) {
                if (bits::test(in_ap, v)) continue;
                if (bits::count_and(g.right_row(v), in_a) >= t - 1) {
                    joined = v;
                    joined_right = true;
                }
            }
        }
        if (joined < 0) break;
        bits::set(joined_right ? std::span<std::uint64_t>(in_ap) : std::span<std::uint64_t>(in_a),
                  joined);
        res.activation.emplace_back(joined, joined_right);
    }
    for (int v = 0; v < n; ++v) {
        if (bits::test(in_a, v)) res.a.push_back(v);
        if (bits::test(in_ap, v)) res.ap.push_back(v);
    }
    return res;
}

Decomposition decompose(const BipartiteGraph& g, const SatParams& params,
                        const CoreSpec& core) {
    require_square(g);
    if (!core_valid(g, core)) throw std::invalid_argument("decompose: invalid core");
    const int t = params.t, s = params.s;
    if (g.min_degree() < t - 1)
        throw std::domain_error(
            "decompose: minimum degree below t-1; use verify_prop1_path for this graph");

    const int n = g.left_size();
    Decomposition d;
    d.core = core;
    auto shell = shell_closure(g, core, t);
    d.a = shell.a;
    d.ap = shell.ap;
    d.activation = std::move(shell.activation);

    auto in_a = mask_of(d.a, n);
    auto in_ap = mask_of(d.ap, n);

    std::vector<int> b, c, bp, cp;
    for (int v = 0; v < n; ++v) {
        if (!bits::test(in_a, v))
            (bits::count_and(g.left_row(v), in_ap) >= s - 1 ? b : c).push_back(v);
        if (!bits::test(in_ap, v))
            (bits::count_and(g.right_row(v), in_a) >= s - 1 ? bp : cp).push_back(v);
    }
    auto in_b = mask_of(b, n);
    auto in_bp = mask_of(bp, n);
    for (int v : b)
        (bits::count_and(g.left_row(v), in_bp) >= t - s ? d.b1 : d.b2).push_back(v);
    for (int v : bp)
        (bits::count_and(g.right_row(v), in_b) >= t - s ? d.b1p : d.b2p).push_back(v);

    auto in_b2p = mask_of(d.b2p, n);
    auto in_b2 = mask_of(d.b2, n);
    for (int v : c) {
        int outside = g.left_degree(v) - bits::count_and(g.left_row(v), in_b2p);
        (outside >= s - 1 ? d.c1 : d.c2).push_back(v);
    }
    for (int v : cp) {
        int outside = g.right_degree(v) - bits::count_and(g.right_row(v), in_b2);
        (outside >= s - 1 ? d.c1p : d.c2p).push_back(v);
    }

    auto in_a0p = mask_of(core.a0p, n);
    long long core_edges = 0;
    for (int u : core.a0) core_edges += bits::count_and(g.left_row(u), in_a0p);

    d.stats = {static_cast<int>(core.a0.size()), static_cast<int>(core.a0p.size()),
               static_cast<int>(d.a.size()),     static_cast<int>(d.ap.size()),
               core_edges,                        static_cast<int>(d.c2.size()),
               static_cast<int>(d.c2p.size())};
    return d;
}

Lemma1Report verify_lemma1(const BipartiteGraph& g, const SatParams& params,
                           const Decomposition& d) {
    Lemma1Report r{};
    r.edges = g.edge_count();
    r.applicable = g.min_degree() >= params.t - 1;
    if (!r.applicable) return r;
    r.bound = lemma1_bound(params.s, params.t, g.left_size(), d.stats.x0, d.stats.x0p,
                           d.stats.core_edges, d.stats.x, d.stats.xp);
    r.slack = r.edges - r.bound;
    r.holds = r.slack >= 0;
    return r;
}

namespace {

ClaimCheck check_degrees(const BipartiteGraph& g, const std::vector<int>& verts, bool right,
                         const std::vector<std::uint64_t>& mask, int want, bool exact) {
    ClaimCheck c;
    for (int v : verts) {
        int have = right ? bits::count_and(g.right_row(v), mask)
                         : bits::count_and(g.left_row(v), mask);
        if (exact ? have != want : have < want) {
            c.pass = false;
            c.vertex = v;
            return c;
        }
    }
    return c;
}

}  // namespace

ConsequencesReport verify_consequences(const BipartiteGraph& g, const SatParams& params,
                                       const Decomposition& d) {
    const int n = g.left_size();
    ConsequencesReport r;

    for (int v : d.c2) {
        for (int w : d.c2p) {
            if (!g.has_edge(v, w)) {
                r.c2_complete.pass = false;
                r.c2_complete.pair = {v, w};
                break;
            }
        }
        if (!r.c2_complete.pass) break;
    }

    auto in_ab = mask_of(d.a, n);
    for (int v : d.b1) bits::set(in_ab, v);
    for (int v : d.b2) bits::set(in_ab, v);
    std::vector<int> cprime = d.c1p;
    cprime.insert(cprime.end(), d.c2p.begin(), d.c2p.end());
    r.cprime_degree = check_degrees(g, cprime, true, in_ab, params.t - 1, false);

    auto in_apbp = mask_of(d.ap, n);
    for (int v : d.b1p) bits::set(in_apbp, v);
    for (int v : d.b2p) bits::set(in_apbp, v);
    std::vector<int> cleft = d.c1;
    cleft.insert(cleft.end(), d.c2.begin(), d.c2.end());
    r.c_degree = check_degrees(g, cleft, false, in_apbp, params.t - 1, false);
    return r;
}

EqualityReport verify_equality_conditions(const BipartiteGraph& g, const SatParams& params,
                                          const Decomposition& d) {
    const int n = g.left_size();
    EqualityReport r{};
    const long long bound = claim1_bound(params.s, params.t, n, d.stats.x0, d.stats.x0p,
                                         d.stats.core_edges, d.stats.x);
    if (d.stats.y > d.stats.yp) {
        r.applicable = false;
        r.skip_reason = "|C2| > |C2'|; check the transposed graph instead";
        return r;
    }
    if (bound != g.edge_count()) {
        r.applicable = false;
        r.skip_reason = "claim bound " + std::to_string(bound) + " != edge count " +
                        std::to_string(g.edge_count());
        return r;
    }
    r.applicable = true;

    auto in_ab = mask_of(d.a, n);
    for (int v : d.b1) bits::set(in_ab, v);
    for (int v : d.b2) bits::set(in_ab, v);
    std::vector<int> b1p_cp = d.b1p;
    b1p_cp.insert(b1p_cp.end(), d.c1p.begin(), d.c1p.end());
    b1p_cp.insert(b1p_cp.end(), d.c2p.begin(), d.c2p.end());
    r.b1p_cp_exact = check_degrees(g, b1p_cp, true, in_ab, params.t - 1, true);

    auto in_ap = mask_of(d.ap, n);
    std::vector<int> b = d.b1;
    b.insert(b.end(), d.b2.begin(), d.b2.end());
    r.b_exact = check_degrees(g, b, false, in_ap, params.s - 1, true);

    auto in_b2p = mask_of(d.b2p, n);
    r.c1_exact = ClaimCheck{};
    for (int v : d.c1) {
        int outside = g.left_degree(v) - bits::count_and(g.left_row(v), in_b2p);
        if (outside != params.s - 1) {
            r.c1_exact.pass = false;
            r.c1_exact.vertex = v;
            break;
        }
    }

    const long long y = d.stats.y, yp = d.stats.yp, sm1 = params.s - 1;
    r.y_identity = y * sm1 - y * yp == (sm1 * sm1) / 4;
    return r;
}

Prop1Report verify_prop1_path(const BipartiteGraph& g, const SatParams& params) {
    require_square(g);
    Prop1Report r{};
    r.edges = g.edge_count();
    r.applicable = g.min_degree() < params.t - 1;
    if (!r.applicable) return r;
    r.bound = prop1_bound(params.s, params.t, g.left_size());
    r.holds = r.edges >= r.bound;
    return r;
}

}  // namespace bsat
