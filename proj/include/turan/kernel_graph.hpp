#pragma once

#include <vector>

#include "turan/core.hpp"
#include "turan/graph.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

/// Pair graph of a k-uniform family: {x, y} is an edge when the family
/// holds a sunflower of size >= s with kernel exactly {x, y}. Witness
/// sunflowers are cached per edge for audit.
class KernelGraph {
public:
    KernelGraph(Hypergraph base, int s, Graph graph, std::vector<DeltaSystem> witnesses);

    const Hypergraph& base() const { return base_; }
    int s() const { return s_; }
    const Graph& graph() const { return graph_; }

    /// Witness sunflower for the kernel-graph edge {x, y}; throws when the
    /// pair is not an edge.
    const DeltaSystem& witness(int x, int y) const;

private:
    Hypergraph base_;
    int s_;
    Graph graph_;
    std::vector<DeltaSystem> witnesses_;  // aligned with graph_.edges()
};

/// Requires k >= 3 (for k = 2 a pair kernel already fills whole edges).
KernelGraph kernel_graph(const Hypergraph& f, int s);

/// 3-uniform family on 3t vertices joining the matching {2i, 2i+1} with the
/// singletons {2t+j}: t^2 edges whose kernel graph at every threshold
/// 2..t is just the t-edge matching, with no vertex joined to all others.
Hypergraph counterexample_f3(int t);

}  // namespace turan
