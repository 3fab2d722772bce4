#include "turan/constructions.hpp"

#include <stdexcept>

#include "turan/core.hpp"

namespace turan {

Hypergraph join(const Hypergraph& a, const Hypergraph& b) {
    if (a.support().intersects(b.support()))
        throw std::invalid_argument("join needs disjoint supports");
    const int n = std::max(a.n(), b.n());
    Hypergraph out(a.k() + b.k(), n);
    for (const VertexSet ea : a.edges())
        for (const VertexSet eb : b.edges()) out.add_edge(ea | eb);
    return out;
}

Hypergraph lower_bound_family(int n, int k, const Forest& t) {
    const int y = sigma(t).value - 1;
    if (n < y + k)
        throw std::invalid_argument("universe too small for the cross family");
    const VertexSet head = VertexSet::range(0, y);
    Hypergraph out(k, n);
    for (const VertexSet e : lex_ksubsets(n, k))
        if ((e & head).size() == 1) out.add_edge(e);
    return out;
}

Hypergraph matching_extremal_family(int n, int k, int s_size) {
    if (s_size < 0 || s_size > n)
        throw std::invalid_argument("head set size out of range");
    const VertexSet head = VertexSet::range(0, s_size);
    Hypergraph out(k, n);
    for (const VertexSet e : lex_ksubsets(n, k))
        if (e.intersects(head)) out.add_edge(e);
    return out;
}

long long erdos_matching_bound(int n, int k, int nu) {
    if (n < 0 || k < 1 || nu < 0)
        throw std::invalid_argument("bad matching bound arguments");
    return binomial(n, k) - binomial(n - nu, k);
}

long long matching_asymptotic_coefficient(int nu, MatchingCoefficientConvention c) {
    if (nu < 1) throw std::invalid_argument("matching size must be >= 1");
    switch (c) {
        case MatchingCoefficientConvention::as_printed:
            return nu;
        case MatchingCoefficientConvention::forbidden_pattern_shift:
            return nu - 1;
    }
    throw std::invalid_argument("unknown convention");
}

Hypergraph path_extremal_family(int n, int k, int ell) {
    if (ell < 1) throw std::invalid_argument("path length must be >= 1");
    const int t = (ell - 1) / 2;
    const bool even = ell % 2 == 0;
    if (n < t + (even ? 2 : 0))
        throw std::invalid_argument("universe too small for the path family");
    const VertexSet head = VertexSet::range(0, t);
    const VertexSet pair = even ? VertexSet::of({t, t + 1}) : VertexSet{};
    Hypergraph out(k, n);
    for (const VertexSet e : lex_ksubsets(n, k)) {
        if (e.intersects(head))
            out.add_edge(e);
        else if (even && pair.subset_of(e))
            out.add_edge(e);
    }
    return out;
}

long long path_extremal_value(int n, int k, int ell) {
    if (ell < 1) throw std::invalid_argument("path length must be >= 1");
    const int t = (ell - 1) / 2;
    long long total = 0;
    // k-sets meeting {0..t-1}, grouped by their smallest head vertex.
    for (int i = 1; i <= t; ++i) total += binomial(n - i, k - 1);
    if (ell % 2 == 0) total += binomial(n - t - 2, k - 2);
    return total;
}

long long star_phi(int ell) {
    if (ell < 1) throw std::invalid_argument("star size must be >= 1");
    const long long l = ell;
    if (ell % 2 == 1) return l * l - l;
    return l * l - (3 * l) / 2;
}

long long forest_turan_bound(int v, int k, int n) {
    if (k < 1 || v < k) throw std::invalid_argument("need v >= k >= 1");
    return (v - k) * binomial(n, k - 1);
}

std::vector<VertexSet> greedy_packing(int n, int block, int max_intersect) {
    if (block < 1 || block > n)
        throw std::invalid_argument("block size out of range");
    if (max_intersect < 0)
        throw std::invalid_argument("intersection cap must be >= 0");
    std::vector<VertexSet> chosen;
    for (const VertexSet cand : lex_ksubsets(n, block)) {
        bool fits = true;
        for (const VertexSet b : chosen) {
            if ((cand & b).size() > max_intersect) {
                fits = false;
                break;
            }
        }
        if (fits) chosen.push_back(cand);
    }
    return chosen;
}

Hypergraph kalai_packing_family(int n, int k, int v) {
    if (k < 2) throw std::invalid_argument("uniformity must be >= 2");
    if (v < k) throw std::invalid_argument("forbidden tree needs v >= k");
    Hypergraph out(k, n);
    if (v - 1 < k || v - 1 > n) return out;  // blocks too small to hold an edge
    // Blocks overlap in < k - 1 vertices, so no k-set lies in two blocks and
    // no tight connection can leave a block.
    for (const VertexSet block : greedy_packing(n, v - 1, k - 2)) {
        const std::vector<int> ids = block.to_vector();
        for (const VertexSet rel : lex_ksubsets(v - 1, k)) {
            VertexSet e;
            for (const int r : rel) e.add(ids[static_cast<std::size_t>(r)]);
            out.add_edge(e);
        }
    }
    return out;
}

}  // namespace turan
