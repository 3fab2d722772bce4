#pragma once

#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/growth.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

/// Witness for subhypergraph containment: an injective vertex map together
/// with the host edge backing each pattern edge.
struct Embedding {
    std::vector<int> vertex_map;  // pattern vertex -> host vertex
    std::vector<int> edge_map;    // pattern edge index -> host edge index

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

bool validate_embedding(const Hypergraph& host, const Hypergraph& pattern,
                        const Embedding& emb);

/// Backtracking subhypergraph search. Pattern edges are matched
/// most-constrained first; the first embedding in the resulting canonical
/// exploration order is returned. Requires equal uniformity.
std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern);

/// Containment check restricted to embeddings that use host_edges[forced]
/// as the image of some pattern edge. Host is passed as a raw edge list so
/// the exact search can probe candidate families without rebuilding
/// hypergraphs.
bool contains_using_edge(const std::vector<VertexSet>& host_edges, int host_n,
                         const Hypergraph& pattern, int forced);

struct PeelLogEntry {
    VertexSet x;                    // the low-degree (k-1)-set
    std::vector<VertexSet> removed; // its edges at removal time
};

struct ShadowPeel {
    Hypergraph residue;
    std::vector<PeelLogEntry> log;
};

/// Repeatedly removes all edges through a (k-1)-set of positive degree at
/// most threshold (scanning in lexicographic order, restarting after each
/// removal). In the residue every (k-1)-set has degree 0 or > threshold.
ShadowPeel peel_shadow(const Hypergraph& f, int threshold);

/// Embeds a tight forest T with v vertices: peel at threshold v - k, then
/// grow the image edge by edge inside the residue, where every extension is
/// guaranteed to exist. Empty residue falls back to the generic containment
/// search. Requires a valid tight sequence; disconnected ones are completed
/// to a tree first and the found image restricted back.
std::optional<Embedding> embed_tight_forest(const Hypergraph& f, const GrowthSequence& t);

enum class KernelEmbedOutcome {
    found,
    /// The kernel graph route did not produce an embedding. This does not
    /// certify absence of the expansion in f.
    not_found_inconclusive,
};

struct KernelEmbedResult {
    KernelEmbedOutcome outcome;
    std::optional<Embedding> embedding;  // of expand(h, k).result into f
    int s;                               // kernel degree threshold used
};

/// Searches for h inside the kernel graph of f at threshold s (default
/// k * e(h)) and, on success, realizes the expansion of h by picking one
/// pairwise-fresh petal per base edge from the witness sunflowers.
KernelEmbedResult embed_expansion_via_kernel(const Hypergraph& f, const Graph& h,
                                             std::optional<int> s_override = std::nullopt);

struct CenterPartition {
    std::vector<int> center;  // per edge of f: its center vertex, or -1
    std::vector<int> f1;      // indices of edges with no center
    std::vector<int> f2;      // indices of edges with a center
};

/// An edge has center x when x is joined in g2 to every other vertex of the
/// edge; the smallest such x is recorded. g2 must live on the universe of f.
CenterPartition classify_centers(const Hypergraph& f, const Graph& g2);

}  // namespace turan
