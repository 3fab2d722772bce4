#pragma once

#include <initializer_list>
#include <vector>

#include "turan/vertex_set.hpp"

namespace turan {

/// k-uniform set family on vertices 0..n-1. Edges are kept in sorted-tuple
/// lexicographic order with duplicates rejected, so the insertion order never
/// influences equality or any downstream computation.
class Hypergraph {
public:
    Hypergraph(int k, int n);
    Hypergraph(int k, int n, const std::vector<VertexSet>& edges);

    void add_edge(VertexSet e);
    void add_edge(std::initializer_list<int> vertices);

    int k() const { return k_; }
    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    /// Index of an edge in canonical order, -1 when absent.
    int edge_index(VertexSet e) const;
    bool has_edge(VertexSet e) const { return edge_index(e) >= 0; }

    /// Union of all edges (isolated vertices of the universe excluded).
    VertexSet support() const;

    /// vertex -> indices of edges through it.
    std::vector<std::vector<int>> incidence() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int k_;
    int n_;
    std::vector<VertexSet> edges_;
};

/// All k-subsets of {0..n-1} in sorted-tuple lexicographic order.
std::vector<VertexSet> lex_ksubsets(int n, int k);

Hypergraph complete_hypergraph(int k, int n);

}  // namespace turan
