#include "turan/kernel_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "turan/constructions.hpp"

namespace turan {

KernelGraph::KernelGraph(Hypergraph base, int s, Graph graph,
                         std::vector<DeltaSystem> witnesses)
    : base_(std::move(base)), s_(s), graph_(std::move(graph)),
      witnesses_(std::move(witnesses)) {
    if (witnesses_.size() != graph_.edges().size())
        throw std::invalid_argument("one witness sunflower per kernel-graph edge");
}

const DeltaSystem& KernelGraph::witness(int x, int y) const {
    if (x > y) std::swap(x, y);
    const auto& es = graph_.edges();
    const auto it = std::lower_bound(es.begin(), es.end(), std::pair<int, int>{x, y});
    if (it == es.end() || *it != std::pair<int, int>{x, y})
        throw std::invalid_argument("pair is not a kernel-graph edge");
    return witnesses_[static_cast<std::size_t>(it - es.begin())];
}

KernelGraph kernel_graph(const Hypergraph& f, int s) {
    if (f.k() < 3)
        throw std::invalid_argument("kernel graph needs uniformity >= 3");
    if (s < 1) throw std::invalid_argument("kernel degree threshold must be >= 1");
    Graph g(f.n());
    std::vector<DeltaSystem> witnesses;
    for (int x = 0; x < f.n(); ++x) {
        for (int y = x + 1; y < f.n(); ++y) {
            const VertexSet pair = VertexSet::of({x, y});
            // The plain degree caps the kernel degree, so most pairs are
            // rejected without touching the matching solver.
            if (degree(f, pair) < s) continue;
            KernelDegreeResult kd = kernel_degree(f, pair);
            if (kd.value < s) continue;
            g.add_edge(x, y);
            witnesses.push_back(std::move(kd.witness));
        }
    }
    return KernelGraph(f, s, std::move(g), std::move(witnesses));
}

Hypergraph counterexample_f3(int t) {
    if (t < 1) throw std::invalid_argument("counterexample needs t >= 1");
    const int n = 3 * t;
    Hypergraph pairs(2, n);
    for (int i = 0; i < t; ++i) pairs.add_edge({2 * i, 2 * i + 1});
    Hypergraph singles(1, n);
    for (int j = 0; j < t; ++j) singles.add_edge(VertexSet::single(2 * t + j));
    return join(pairs, singles);
}

}  // namespace turan
