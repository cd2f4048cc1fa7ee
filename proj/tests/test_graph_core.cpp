#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "bsat/bipartite_graph.hpp"
#include "bsat/canonical.hpp"
#include "oracles.hpp"

using namespace bsat;

namespace {

long long degree_sum_left(const BipartiteGraph& g) {
    long long s = 0;
    for (int u = 0; u < g.left_size(); ++u) s += g.left_degree(u);
    return s;
}

long long degree_sum_right(const BipartiteGraph& g) {
    long long s = 0;
    for (int v = 0; v < g.right_size(); ++v) s += g.right_degree(v);
    return s;
}

}  // namespace

TEST_CASE("empty graphs") {
    BipartiteGraph g(2, 2);
    CHECK(g.edge_count() == 0);
    int pairs = 0;
    g.for_each_non_edge([&](int, int) { ++pairs; });
    CHECK(pairs == 4);

    BipartiteGraph h(1, 5);
    CHECK(h.edge_count() == 0);
    CHECK(h.left_degree(0) == 0);
    for (int v = 0; v < 5; ++v) CHECK(h.right_degree(v) == 0);

    CHECK_THROWS_AS(BipartiteGraph(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(3, 0), std::invalid_argument);
}

TEST_CASE("complete 4x4 by explicit adds") {
    BipartiteGraph g(4, 4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) g.add_edge(u, v);
    CHECK(g.edge_count() == 16);
    CHECK(g.is_complete());
    CHECK(g == BipartiteGraph::complete(4, 4));
}

TEST_CASE("add/remove/has") {
    BipartiteGraph g(2, 2);
    CHECK(g.add_edge(0, 1));
    CHECK(g.has_edge(0, 1));
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.add_edge(0, 1));  // idempotent no-op

    CHECK(g.remove_edge(0, 1));
    CHECK_FALSE(g.remove_edge(0, 1));  // second removal reports unchanged
    CHECK(g.edge_count() == 0);

    auto c = BipartiteGraph::complete(3, 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(c.has_edge(u, v));

    CHECK_THROWS_AS(g.has_edge(2, 0), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(0, -1), std::out_of_range);
    CHECK_THROWS_AS(g.remove_edge(0, 5), std::out_of_range);
}

TEST_CASE("mutation round-trip and degree sums") {
    oracle::Rng rng{7};
    for (int trial = 0; trial < 50; ++trial) {
        BipartiteGraph g = rng.graph(4, 5);
        BipartiteGraph before = g;
        int u = static_cast<int>(rng.next() % 4), v = static_cast<int>(rng.next() % 5);
        bool had = g.has_edge(u, v);
        if (had) {
            g.remove_edge(u, v);
            g.add_edge(u, v);
        } else {
            g.add_edge(u, v);
            g.remove_edge(u, v);
        }
        CHECK(g == before);
        CHECK(degree_sum_left(g) == g.edge_count());
        CHECK(degree_sum_right(g) == g.edge_count());
    }
}

TEST_CASE("non_edges complements the edge set") {
    BipartiteGraph c = BipartiteGraph::complete(3, 3);
    CHECK(c.non_edges().empty());

    oracle::Rng rng{21};
    for (int trial = 0; trial < 20; ++trial) {
        BipartiteGraph g = rng.graph(4, 4);
        auto ne = g.non_edges();
        CHECK(static_cast<long long>(ne.size()) == 16 - g.edge_count());
        for (auto [u, v] : ne) CHECK_FALSE(g.has_edge(u, v));
        // row-major and duplicate-free
        CHECK(std::is_sorted(ne.begin(), ne.end()));
        CHECK(std::adjacent_find(ne.begin(), ne.end()) == ne.end());
    }
}

TEST_CASE("transpose stays in sync") {
    oracle::Rng rng{3};
    BipartiteGraph g = rng.graph(5, 3);
    BipartiteGraph t = g.transposed();
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 3; ++v) CHECK(g.has_edge(u, v) == t.has_edge(v, u));
    CHECK(t.edge_count() == g.edge_count());
}

TEST_CASE("multi-word rows at n = 10^4") {
    const int n = 10000;
    BipartiteGraph g(n, n);
    CHECK(g.row_words() > 1);
    g.add_edge(0, n - 1);
    g.add_edge(n - 1, 0);
    g.add_edge(4097, 8191);
    CHECK(g.has_edge(4097, 8191));
    CHECK(g.edge_count() == 3);
    CHECK(g.right_degree(n - 1) == 1);
    CHECK(g.transposed().has_edge(8191, 4097));
    g.remove_edge(4097, 8191);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("bmat round trip") {
    oracle::Rng rng{11};
    for (int trial = 0; trial < 20; ++trial) {
        BipartiteGraph g = rng.graph(3 + trial % 4, 2 + trial % 5);
        CHECK(bmat_from_string(to_bmat(g)) == g);
    }
}

TEST_CASE("bmat format details") {
    BipartiteGraph g = bmat_from_string("2 3\n010\n101\n");
    CHECK(g.left_size() == 2);
    CHECK(g.right_size() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));

    // trailing newline optional, CRLF tolerated
    CHECK(bmat_from_string("2 3\n010\n101") == g);
    CHECK(bmat_from_string("2 3\r\n010\r\n101\r\n") == g);
    CHECK(to_bmat(g) == "2 3\n010\n101\n");
}

TEST_CASE("bmat parse errors carry line and column") {
    auto expect_error = [](const std::string& text, int line, int column) {
        try {
            bmat_from_string(text);
            FAIL("expected BmatParseError for: " << text);
        } catch (const BmatParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    expect_error("", 1, 1);
    expect_error("2\n00\n00\n", 1, 1);
    expect_error("2 2 9\n00\n00\n", 1, 1);
    expect_error("0 2\n", 1, 1);
    expect_error("2 2\n00\n", 3, 1);        // missing row
    expect_error("2 2\n000\n00\n", 2, 4);   // row too long
    expect_error("2 2\n00\n0x\n", 3, 2);    // bad character
}

TEST_CASE("canonical keys are permutation invariant") {
    oracle::Rng rng{13};
    std::vector<int> pl{2, 0, 3, 1}, pr{1, 3, 0, 2};
    for (int trial = 0; trial < 30; ++trial) {
        BipartiteGraph g = rng.graph(4, 4);
        BipartiteGraph h = oracle::permuted(g, pl, pr);
        CHECK(canonical_form(g, CanonMode::kFixedSides) ==
              canonical_form(h, CanonMode::kFixedSides));
        CHECK(canonical_form(g, CanonMode::kSwappableSides) ==
              canonical_form(h, CanonMode::kSwappableSides));
    }
}

TEST_CASE("swappable mode identifies a path with its mirror") {
    // u0 - v0 - u1 and the side-swapped image
    BipartiteGraph p(2, 2);
    p.add_edge(0, 0);
    p.add_edge(1, 0);
    BipartiteGraph q(2, 2);
    q.add_edge(0, 0);
    q.add_edge(0, 1);
    CHECK(canonical_form(p, CanonMode::kSwappableSides) ==
          canonical_form(q, CanonMode::kSwappableSides));
    CHECK(canonical_form(p, CanonMode::kFixedSides) !=
          canonical_form(q, CanonMode::kFixedSides));
}

TEST_CASE("canonical form errors") {
    CHECK_THROWS_AS(canonical_form(BipartiteGraph(2, 3), CanonMode::kSwappableSides),
                    std::invalid_argument);
}

TEST_CASE("canonical key counts match the orbit oracle on every host up to 3x3") {
    auto count_keys = [](int nl, int nr, bool swappable) {
        std::set<std::vector<std::uint64_t>> keys;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (nl * nr)); ++code) {
            auto g = oracle::graph_from_code(nl, nr, code);
            keys.insert(
                canonical_form(g, swappable ? CanonMode::kSwappableSides : CanonMode::kFixedSides)
                    .key);
        }
        return static_cast<long long>(keys.size());
    };
    for (int nl = 1; nl <= 3; ++nl)
        for (int nr = 1; nr <= 3; ++nr) {
            INFO("host " << nl << "x" << nr);
            CHECK(count_keys(nl, nr, false) == oracle::orbit_count(nl, nr, false));
            if (nl == nr) CHECK(count_keys(nl, nr, true) == oracle::orbit_count(nl, nr, true));
        }
    // frozen spot values: row/column permutation orbits of 0/1 matrices
    CHECK(oracle::orbit_count(2, 2, false) == 7);
    CHECK(oracle::orbit_count(2, 3, false) == 13);
    CHECK(oracle::orbit_count(3, 3, false) == 36);
    CHECK(oracle::orbit_count(3, 3, true) == 26);
}

TEST_CASE("canonical invariance under random relabelings at larger sizes") {
    oracle::Rng rng{97};
    auto shuffled = [&](int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = p.size(); i > 1; --i)
            std::swap(p[i - 1], p[rng.next() % i]);
        return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
        int nl = 5 + static_cast<int>(trial % 2), nr = 5;
        BipartiteGraph g = rng.graph(nl, nr, 1 + trial % 3, 4);
        BipartiteGraph h = oracle::permuted(g, shuffled(nl), shuffled(nr));
        CHECK(canonical_form(g, CanonMode::kFixedSides) ==
              canonical_form(h, CanonMode::kFixedSides));
        if (nl == nr) {
            BipartiteGraph m = oracle::permuted(g, shuffled(nl), shuffled(nr), true);
            CHECK(canonical_form(g, CanonMode::kSwappableSides) ==
                  canonical_form(m, CanonMode::kSwappableSides));
        }
    }
}

TEST_CASE("canonical key decodes back to a representative") {
    oracle::Rng rng{17};
    for (int trial = 0; trial < 20; ++trial) {
        BipartiteGraph g = rng.graph(4, 3);
        auto cf = canonical_form(g, CanonMode::kFixedSides);
        BipartiteGraph rep = graph_from_canonical_key(cf.key);
        CHECK(canonical_form(rep, CanonMode::kFixedSides) == cf);
        CHECK(rep.edge_count() == g.edge_count());
    }
}
