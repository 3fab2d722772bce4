#pragma once

#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/growth.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

/// Cross join of two families with disjoint supports: every union of an
/// edge of a with an edge of b, a (ka + kb)-uniform family of size |a|*|b|.
Hypergraph join(const Hypergraph& a, const Hypergraph& b);

/// All k-sets meeting {0..sigma-2} in exactly one vertex: a family of size
/// (sigma - 1) * C(n - sigma + 1, k - 1) that avoids the expansion of t.
/// Requires n >= sigma(t) - 1 + k.
Hypergraph lower_bound_family(int n, int k, const Forest& t);

/// All k-sets meeting {0..s_size-1}; matching number s_size.
Hypergraph matching_extremal_family(int n, int k, int s_size);

/// C(n, k) - C(n - nu, k), the size bound for families with no nu + 1
/// pairwise disjoint edges.
long long erdos_matching_bound(int n, int k, int nu);

/// Leading coefficient (in units of C(n, k-1)) for the matching Turan
/// asymptotics. Two conventions circulate, differing by whether "forbid
/// nu disjoint edges" or "forbid a (nu+1)-matching" is meant; brute-force
/// values at small n match the shifted one. Both are exposed.
enum class MatchingCoefficientConvention { as_printed, forbidden_pattern_shift };
long long matching_asymptotic_coefficient(int nu, MatchingCoefficientConvention c);

/// Extremal family avoiding the linear path with ell edges: with
/// t = (ell - 1) / 2 rounded down, all k-sets meeting {0..t-1}, plus (for
/// even ell) the k-sets of the remaining vertices through the fixed pair
/// {t, t+1}.
Hypergraph path_extremal_family(int n, int k, int ell);
long long path_extremal_value(int n, int k, int ell);

/// phi(ell): ell^2 - ell for odd ell, ell^2 - (3/2) ell for even ell >= 2.
long long star_phi(int ell);

/// (v - k) * C(n, k-1), the edge bound beyond which every tight forest on
/// v vertices embeds. Requires v >= k.
long long forest_turan_bound(int v, int k, int n);

/// Greedy lexicographic packing of `block`-sets of {0..n-1} with pairwise
/// intersections of at most max_intersect vertices.
std::vector<VertexSet> greedy_packing(int n, int block, int max_intersect);

/// Union of complete k-graphs on the blocks of a greedy (v-1)-set packing
/// with pairwise intersections below k - 1. Avoids every tight tree on v
/// vertices. A greedy packing stands in for the asymptotically optimal
/// near-perfect designs, so sizes are a lower envelope, not the asymptote.
Hypergraph kalai_packing_family(int n, int k, int v);

struct FormulaReport {
    std::string formula;
    std::vector<std::pair<std::string, long long>> params;
    long long value;
};

}  // namespace turan
