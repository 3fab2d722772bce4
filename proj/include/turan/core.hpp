#pragma once

#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/vertex_set.hpp"

namespace turan {

/// Binomial coefficient in checked 64-bit arithmetic. Out-of-range arguments
/// (negative, or t > a) give 0; a result that does not fit 64 bits throws
/// std::overflow_error.
long long binomial(long long a, long long t);

/// Pairwise disjoint edge collection; disjointness is checked on construction.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<VertexSet> edges);

    const std::vector<VertexSet>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    VertexSet covered() const;

private:
    std::vector<VertexSet> edges_;
};

/// Number of edges containing w. deg(empty) = |F|; |w| > k gives 0.
int degree(const Hypergraph& f, VertexSet w);

/// { e minus w : w subset of e }, a (k - |w|)-uniform family on the same
/// universe. Requires |w| < k.
Hypergraph link(const Hypergraph& f, VertexSet w);

struct MatchingResult {
    int value;
    Matching witness;
};

/// Exact matching number with a lexicographically least maximum matching
/// (least as a sequence of canonical edge indices).
MatchingResult matching_number(const Hypergraph& f);

/// Sunflower: pairwise intersections of the members all equal the kernel.
/// Members are kernel + petal with the petals pairwise disjoint.
struct DeltaSystem {
    VertexSet kernel;
    std::vector<VertexSet> petals;
};

bool is_valid_delta_system(const Hypergraph& f, const DeltaSystem& d);

struct KernelDegreeResult {
    int value;
    DeltaSystem witness;
};

/// Largest sunflower in F with kernel exactly w, computed as the matching
/// number of the link. Requires |w| < k.
KernelDegreeResult kernel_degree(const Hypergraph& f, VertexSet w);

struct TransversalResult {
    int value;
    VertexSet witness;
};

/// Exact transversal (vertex cover) number with a lexicographically least
/// minimum transversal.
TransversalResult transversal_number(const Hypergraph& f);

struct CrossCutResult {
    std::optional<int> value;  // nullopt: no 1-cross-cut exists
    VertexSet witness;         // meaningful only when value is present
};

/// Minimum size of a vertex set meeting every edge in exactly one vertex,
/// or nullopt when no such set exists.
CrossCutResult one_cross_cut_number(const Hypergraph& f);

}  // namespace turan
