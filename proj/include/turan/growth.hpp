#pragma once

#include <vector>

#include "turan/graph.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

/// One step of the inductive k-forest construction: an edge together with
/// the set of earlier vertices it attaches through (its defining set, empty
/// when the edge opens a new component).
struct GrowthStep {
    VertexSet edge;
    VertexSet defining;

    friend bool operator==(const GrowthStep&, const GrowthStep&) = default;
};

class GrowthSequence {
public:
    explicit GrowthSequence(int k);
    GrowthSequence(int k, std::vector<GrowthStep> steps);

    void push(VertexSet edge, VertexSet defining);

    int k() const { return k_; }
    int edge_count() const { return static_cast<int>(steps_.size()); }
    const std::vector<GrowthStep>& steps() const { return steps_; }
    const GrowthStep& step(int i) const { return steps_[static_cast<std::size_t>(i)]; }

    /// Union of all edge vertex sets.
    VertexSet span() const;

    friend bool operator==(const GrowthSequence&, const GrowthSequence&) = default;

private:
    int k_;
    std::vector<GrowthStep> steps_;
};

/// Checks the inductive construction: each edge has k vertices, the first
/// defining set is empty, and every later edge meets the earlier vertices in
/// exactly its defining set, which must sit inside one earlier edge and have
/// at most k - 1 vertices.
bool validate_growth(const GrowthSequence& seq);

/// Every defining set empty or a singleton. Throws on an invalid sequence.
bool is_linear(const GrowthSequence& seq);

/// Every defining set empty or of size exactly k - 1. Throws on an invalid
/// sequence.
bool is_tight(const GrowthSequence& seq);

/// Inserts edges on the existing vertex set until every defining set has
/// k - 1 vertices, producing a connected tight sequence that contains the
/// input edges and spans the same vertices. On v vertices the output has
/// v - k + 1 edges.
GrowthSequence tight_completion(const GrowthSequence& seq);

/// The edge family of a growth sequence with vertices relabeled densely to
/// 0..v-1 in increasing original order.
Hypergraph growth_to_hypergraph(const GrowthSequence& seq);

/// Same relabeling applied to the sequence itself.
GrowthSequence relabel_dense(const GrowthSequence& seq);

GrowthSequence linear_path_growth(int k, int ell);
GrowthSequence tight_path_growth(int k, int q);

struct ExpandedForest {
    Graph base;
    int k;
    Hypergraph result;
    std::vector<VertexSet> fresh;  // per base edge, in base edge order
};

/// k-expansion: base vertices keep their ids, the j-th base edge receives
/// k - 2 private vertices p + j(k-2) .. p + (j+1)(k-2) - 1. k = 2 returns
/// the base graph itself as a hypergraph.
ExpandedForest expand(const Graph& base, int k);

struct SigmaResult {
    int value;
    VertexSet witness;
};

/// min { |X| + e(T - X) : X independent }, the quantity governing the
/// Turan number of the expansion. Requires at least one edge.
SigmaResult sigma(const Forest& t);

Hypergraph matching_family(int k, int nu);
Hypergraph linear_path(int k, int ell);
Hypergraph linear_star(int k, int ell);

Graph path_graph(int ell);
Graph star_graph(int ell);

/// Caterpillar on the path a1 b1 b2 a2 with d pendant leaves on each a and
/// c pendant leaves on each b; requires d > c >= 1. Transversal number 4,
/// sigma 2c + 3.
Forest example_tree_sec4(int d, int c);

}  // namespace turan
