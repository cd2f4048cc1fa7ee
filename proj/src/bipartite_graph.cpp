#include "bsat/bipartite_graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace bsat {

BipartiteGraph::BipartiteGraph(int n_left, int n_right)
    : n_left_(n_left),
      n_right_(n_right),
      row_words_(bits::words_for(n_right)),
      col_words_(bits::words_for(n_left)) {
    if (n_left < 1 || n_right < 1)
        throw std::invalid_argument("BipartiteGraph sides must be >= 1");
    adj_.assign(static_cast<std::size_t>(n_left_) * row_words_, 0);
    adj_t_.assign(static_cast<std::size_t>(n_right_) * col_words_, 0);
}

BipartiteGraph BipartiteGraph::complete(int n_left, int n_right) {
    BipartiteGraph g(n_left, n_right);
    for (int u = 0; u < n_left; ++u)
        for (int v = 0; v < n_right; ++v) g.add_edge(u, v);
    return g;
}

bool BipartiteGraph::has_edge(int u, int v) const {
    check_left(u);
    check_right(v);
    return bits::test(left_row(u), v);
}

bool BipartiteGraph::add_edge(int u, int v) {
    if (has_edge(u, v)) return false;
    bits::set({adj_.data() + static_cast<std::size_t>(u) * row_words_,
               static_cast<std::size_t>(row_words_)},
              v);
    bits::set({adj_t_.data() + static_cast<std::size_t>(v) * col_words_,
               static_cast<std::size_t>(col_words_)},
              u);
    ++edge_count_;
    return true;
}

bool BipartiteGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return false;
    bits::reset({adj_.data() + static_cast<std::size_t>(u) * row_words_,
                 static_cast<std::size_t>(row_words_)},
                v);
    bits::reset({adj_t_.data() + static_cast<std::size_t>(v) * col_words_,
                 static_cast<std::size_t>(col_words_)},
                u);
    --edge_count_;
    return true;
}

int BipartiteGraph::left_degree(int u) const { return bits::count(left_row(u)); }

int BipartiteGraph::right_degree(int v) const { return bits::count(right_row(v)); }

int BipartiteGraph::min_degree() const {
    int d = n_right_;
    for (int u = 0; u < n_left_; ++u) d = std::min(d, left_degree(u));
    for (int v = 0; v < n_right_; ++v) d = std::min(d, right_degree(v));
    return d;
}

BipartiteGraph BipartiteGraph::transposed() const {
    BipartiteGraph t(n_right_, n_left_);
    t.adj_ = adj_t_;
    t.adj_t_ = adj_;
    t.edge_count_ = edge_count_;
    return t;
}

std::vector<std::pair<int, int>> BipartiteGraph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_left_) * n_right_ - edge_count_);
    for_each_non_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

BmatParseError::BmatParseError(int line, int column, const std::string& what)
    : std::runtime_error("bmat parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

BipartiteGraph read_bmat(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw BmatParseError(1, 1, "missing header line");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    std::istringstream hs(header);
    long long nl = 0, nr = 0;
    if (!(hs >> nl >> nr)) throw BmatParseError(1, 1, "header must be \"<n_left> <n_right>\"");
    std::string rest;
    if (hs >> rest) throw BmatParseError(1, 1, "trailing tokens after sizes");
    if (nl < 1 || nr < 1) throw BmatParseError(1, 1, "sides must be >= 1");
    if (nl > 100000 || nr > 100000) throw BmatParseError(1, 1, "sides too large");

    BipartiteGraph g(static_cast<int>(nl), static_cast<int>(nr));
    for (int u = 0; u < nl; ++u) {
        std::string row;
        if (!std::getline(in, row))
            throw BmatParseError(2 + u, 1, "expected " + std::to_string(nl) +
                                               " adjacency rows, got " + std::to_string(u));
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (static_cast<long long>(row.size()) != nr)
            throw BmatParseError(2 + u, static_cast<int>(row.size()) + 1,
                                 "row must have exactly " + std::to_string(nr) + " characters");
        for (int v = 0; v < nr; ++v) {
            if (row[v] == '1')
                g.add_edge(u, v);
            else if (row[v] != '0')
                throw BmatParseError(2 + u, v + 1, "expected '0' or '1'");
        }
    }
    return g;
}

BipartiteGraph bmat_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_bmat(in);
}

void write_bmat(const BipartiteGraph& g, std::ostream& out) {
    out << g.left_size() << ' ' << g.right_size() << '\n';
    for (int u = 0; u < g.left_size(); ++u) {
        for (int v = 0; v < g.right_size(); ++v)
            out << (bits::test(g.left_row(u), v) ? '1' : '0');
        out << '\n';
    }
}

std::string to_bmat(const BipartiteGraph& g) {
    std::ostringstream out;
    write_bmat(g, out);
    return out.str();
}

}  // namespace bsat
