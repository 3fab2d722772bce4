#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/vertex_set.hpp"

namespace turan {

/// Simple undirected graph on vertices 0..n-1. Edge list is kept sorted as
/// (u, v) pairs with u < v; adjacency is mirrored into per-vertex bitsets.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    VertexSet adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    /// Vertices of positive degree.
    VertexSet support() const;

    /// The same graph as a 2-uniform hypergraph.
    Hypergraph to_hypergraph() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
};

bool is_forest(const Graph& g);

/// A graph certified acyclic at construction.
class Forest {
public:
    explicit Forest(Graph g);

    const Graph& graph() const { return g_; }
    int components() const { return components_; }

    friend bool operator==(const Forest& a, const Forest& b) { return a.g_ == b.g_; }

private:
    Graph g_;
    int components_;
};

/// Lazily enumerates the independent sets of a forest in increasing bitmask
/// order (the empty set first). Enumeration is restricted to n <= 32, which
/// is already past the point where listing all sets is useful.
class IndependentSetRange {
public:
    explicit IndependentSetRange(const Forest& t);

    class iterator {
    public:
        using value_type = VertexSet;
        using difference_type = std::ptrdiff_t;

        VertexSet operator*() const { return VertexSet::from_bits(mask_); }
        iterator& operator++();
        iterator operator++(int) {
            iterator old = *this;
            ++(*this);
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.mask_ == b.mask_;
        }

    private:
        friend class IndependentSetRange;
        iterator(const Graph* g, std::uint64_t mask, std::uint64_t limit);
        bool independent() const;

        const Graph* g_ = nullptr;
        std::uint64_t mask_ = 0;
        std::uint64_t limit_ = 0;
    };

    iterator begin() const;
    iterator end() const;

private:
    Graph g_;  // owned copy, so a temporary Forest cannot dangle
    std::uint64_t limit_;
};

IndependentSetRange independent_sets(const Forest& t);

/// (v - 2) * n, the edge count beyond which every forest on v vertices embeds.
long long forest_turan_upper(int v, long long n);

struct PeelResult {
    VertexSet kept;
    Graph induced;
};

/// Repeatedly deletes vertices of degree < delta; the surviving induced
/// subgraph is independent of deletion order. Empty survivor set -> nullopt.
std::optional<PeelResult> min_degree_peel(const Graph& g, int delta);

/// Embeds a forest into a host graph: tries the minimum-degree peel at
/// delta = v - 1 followed by a greedy leaf attachment (which then cannot
/// fail), and falls back to exhaustive backtracking on small hosts.
/// Returns the vertex map (pattern vertex -> host vertex) or nullopt.
std::optional<std::vector<int>> embed_tree_greedy(const Graph& host, const Forest& t);

}  // namespace turan
