#ifndef BSAT_DECOMPOSITION_HPP
#define BSAT_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsat/biclique.hpp"
#include "bsat/bipartite_graph.hpp"

namespace bsat {

// Core of the counting structure: u0 in A0 and u0' in A0' are non-adjacent
// and their full neighborhoods lie inside the core.
struct CoreSpec {
    int u0;
    int u0p;
    std::vector<int> a0;   // left, sorted
    std::vector<int> a0p;  // right, sorted
};

// Checks the CoreSpec invariants against g.
bool core_valid(const BipartiteGraph& g, const CoreSpec& core);

// The low-degree recipe: the lexicographically least non-adjacent pair
// (u0, u0') with both degrees <= s+t-3, cored as A0 = {u0} u N(u0'),
// A0' = {u0'} u N(u0). Absent when no such pair exists.
std::optional<CoreSpec> find_core(const BipartiteGraph& g, const SatParams& params);

// Least fixed point containing the core under "join if you have >= t-1
// neighbors inside", with the activation order retained ((vertex, is_right)
// per join, first-eligible under left-then-right rescans).
struct ShellResult {
    std::vector<int> a;   // left shell, sorted (contains a0)
    std::vector<int> ap;  // right shell, sorted (contains a0p)
    std::vector<std::pair<int, bool>> activation;
};
ShellResult shell_closure(const BipartiteGraph& g, const CoreSpec& core, int t);

struct DecompositionStats {
    int x0, x0p;        // |A0|, |A0'|
    int x, xp;          // |A|, |A'|
    long long core_edges;  // e = e(A0, A0')
    int y, yp;          // |C2|, |C2'|
};

// The full two-sided partition: A + B1 + B2 + C1 + C2 tiles the left side,
// primed parts tile the right side.
struct Decomposition {
    CoreSpec core;
    std::vector<int> a, b1, b2, c1, c2;
    std::vector<int> ap, b1p, b2p, c1p, c2p;
    DecompositionStats stats;
    std::vector<std::pair<int, bool>> activation;
};

// Builds the structure. Throws std::invalid_argument on an invalid core and
// std::domain_error when min degree < t-1 (route those graphs through
// verify_prop1_path instead).
Decomposition decompose(const BipartiteGraph& g, const SatParams& params,
                        const CoreSpec& core);

struct Lemma1Report {
    bool applicable;  // false when min degree < t-1
    long long bound;
    long long edges;
    long long slack;  // edges - bound
    bool holds;
};
Lemma1Report verify_lemma1(const BipartiteGraph& g, const SatParams& params,
                           const Decomposition& d);

struct ClaimCheck {
    bool pass = true;
    std::optional<int> vertex;                     // first offending vertex
    std::optional<std::pair<int, int>> pair;       // first offending pair
};

// The structural facts proved inside the lemma: (a) C2 x C2' complete,
// (b) every v' in C' has >= t-1 neighbors in A u B, (c) mirror on the left.
struct ConsequencesReport {
    ClaimCheck c2_complete;
    ClaimCheck cprime_degree;
    ClaimCheck c_degree;
    bool all_pass() const {
        return c2_complete.pass && cprime_degree.pass && c_degree.pass;
    }
};
ConsequencesReport verify_consequences(const BipartiteGraph& g, const SatParams& params,
                                       const Decomposition& d);

// The four equality conditions; checked only when the claim bound is tight
// and |C2| <= |C2'| (otherwise verdict "skipped").
struct EqualityReport {
    bool applicable;
    std::string skip_reason;
    ClaimCheck b1p_cp_exact;   // B1' u C' vertices: exactly t-1 neighbors in A u B
    ClaimCheck b_exact;        // B vertices: exactly s-1 neighbors in A'
    ClaimCheck c1_exact;       // C1 vertices: exactly s-1 neighbors outside B2'
    bool y_identity = false;   // y(s-1) - y y' == floor((s-1)^2/4)
    bool all_pass() const {
        return applicable && b1p_cp_exact.pass && b_exact.pass && c1_exact.pass &&
               y_identity;
    }
};
EqualityReport verify_equality_conditions(const BipartiteGraph& g, const SatParams& params,
                                          const Decomposition& d);

struct Prop1Report {
    bool applicable;  // false when min degree >= t-1
    long long bound;
    long long edges;
    bool holds;
};
Prop1Report verify_prop1_path(const BipartiteGraph& g, const SatParams& params);

}  // namespace bsat

#endif
