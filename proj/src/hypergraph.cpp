#include "turan/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turan {

Hypergraph::Hypergraph(int k, int n) : k_(k), n_(n) {
    if (k < 1 || k > VertexSet::max_universe)
        throw std::invalid_argument("hypergraph uniformity out of range: " + std::to_string(k));
    if (n < 0 || n > VertexSet::max_universe)
        throw std::invalid_argument("hypergraph universe out of range: " + std::to_string(n));
}

Hypergraph::Hypergraph(int k, int n, const std::vector<VertexSet>& edges) : Hypergraph(k, n) {
    for (VertexSet e : edges) add_edge(e);
}

void Hypergraph::add_edge(VertexSet e) {
    if (e.size() != k_)
        throw std::invalid_argument("edge " + e.to_string() + " is not " + std::to_string(k_) +
                                    "-uniform");
    if (!e.subset_of(VertexSet::range(0, n_)))
        throw std::invalid_argument("edge " + e.to_string() + " leaves the universe [0," +
                                    std::to_string(n_) + ")");
    const auto pos = std::lower_bound(edges_.begin(), edges_.end(), e, VertexSetLexLess{});
    if (pos != edges_.end() && *pos == e)
        throw std::invalid_argument("duplicate edge " + e.to_string());
    edges_.insert(pos, e);
}

void Hypergraph::add_edge(std::initializer_list<int> vertices) {
    VertexSet e = VertexSet::of(vertices);
    if (e.size() != static_cast<int>(vertices.size()))
        throw std::invalid_argument("edge literal repeats a vertex");
    add_edge(e);
}

int Hypergraph::edge_index(VertexSet e) const {
    const auto pos = std::lower_bound(edges_.begin(), edges_.end(), e, VertexSetLexLess{});
    if (pos == edges_.end() || *pos != e) return -1;
    return static_cast<int>(pos - edges_.begin());
}

VertexSet Hypergraph::support() const {
    VertexSet s;
    for (VertexSet e : edges_) s |= e;
    return s;
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_));
    for (int i = 0; i < edge_count(); ++i)
        for (int v : edges_[static_cast<std::size_t>(i)]) inc[static_cast<std::size_t>(v)].push_back(i);
    return inc;
}

std::vector<VertexSet> lex_ksubsets(int n, int k) {
    std::vector<VertexSet> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(VertexSet{});
        return out;
    }
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet e;
        for (int v : c) e.add(v);
        out.push_back(e);
        // advance the rightmost index that still has room
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Hypergraph complete_hypergraph(int k, int n) {
    return Hypergraph(k, n, lex_ksubsets(n, k));
}

}  // namespace turan
