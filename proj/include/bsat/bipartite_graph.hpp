#ifndef BSAT_BIPARTITE_GRAPH_HPP
#define BSAT_BIPARTITE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsat/bitrow.hpp"

namespace bsat {

// Two-sided vertex set with bit-parallel adjacency rows and a maintained
// transpose. Left rows index the right side and vice versa; all indices are
// 0-based. Rows are multi-word, so sides of 10^4+ are fine; the common search
// sizes fit in one word per row.
class BipartiteGraph {
public:
    BipartiteGraph(int n_left, int n_right);

    static BipartiteGraph complete(int n_left, int n_right);

    int left_size() const noexcept { return n_left_; }
    int right_size() const noexcept { return n_right_; }
    long long edge_count() const noexcept { return edge_count_; }

    bool has_edge(int u, int v) const;
    // add on an existing edge / remove on a missing edge are no-ops that
    // return false ("unchanged"); both views stay in sync.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);

    int left_degree(int u) const;
    int right_degree(int v) const;
    // Minimum over all 2n vertices.
    int min_degree() const;

    // Right-side neighbor bits of left vertex u.
    std::span<const std::uint64_t> left_row(int u) const {
        check_left(u);
        return {adj_.data() + static_cast<std::size_t>(u) * row_words_,
                static_cast<std::size_t>(row_words_)};
    }
    // Left-side neighbor bits of right vertex v (the transpose view).
    std::span<const std::uint64_t> right_row(int v) const {
        check_right(v);
        return {adj_t_.data() + static_cast<std::size_t>(v) * col_words_,
                static_cast<std::size_t>(col_words_)};
    }

    int row_words() const noexcept { return row_words_; }
    int col_words() const noexcept { return col_words_; }

    bool is_complete() const noexcept {
        return edge_count_ == static_cast<long long>(n_left_) * n_right_;
    }

    BipartiteGraph transposed() const;

    // Missing pairs in deterministic row-major order.
    template <typename F>
    void for_each_non_edge(F&& f) const {
        for (int u = 0; u < n_left_; ++u)
            for (int v = 0; v < n_right_; ++v)
                if (!bits::test(left_row(u), v)) f(u, v);
    }
    std::vector<std::pair<int, int>> non_edges() const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ && a.adj_ == b.adj_;
    }

private:
    void check_left(int u) const {
        if (u < 0 || u >= n_left_) throw std::out_of_range("left index out of range");
    }
    void check_right(int v) const {
        if (v < 0 || v >= n_right_) throw std::out_of_range("right index out of range");
    }

    int n_left_, n_right_;
    int row_words_, col_words_;
    long long edge_count_ = 0;
    std::vector<std::uint64_t> adj_;    // n_left * row_words
    std::vector<std::uint64_t> adj_t_;  // n_right * col_words
};

// Parse failure for the bmat text format, with 1-based position info.
class BmatParseError : public std::runtime_error {
public:
    BmatParseError(int line, int column, const std::string& what);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_, column_;
};

// bmat: "<n_left> <n_right>\n" then n_left lines of n_right chars from {0,1}.
BipartiteGraph read_bmat(std::istream& in);
BipartiteGraph bmat_from_string(const std::string& text);
void write_bmat(const BipartiteGraph& g, std::ostream& out);
std::string to_bmat(const BipartiteGraph& g);

}  // namespace bsat

#endif
