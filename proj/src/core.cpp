#include "turan/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace turan {

long long binomial(long long a, long long t) {
    if (t < 0 || a < 0 || t > a) return 0;
    t = std::min(t, a - t);
    unsigned long long r = 1;
    for (long long i = 1; i <= t; ++i) {
        // multiply first in 128 bits, then the division is exact
        const unsigned __int128 wide = static_cast<unsigned __int128>(r) *
                                       static_cast<unsigned long long>(a - t + i);
        const unsigned __int128 q = wide / static_cast<unsigned long long>(i);
        if (q > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("binomial(" + std::to_string(a) + "," + std::to_string(t) +
                                      ") exceeds 64 bits");
        r = static_cast<unsigned long long>(q);
    }
    return static_cast<long long>(r);
}

Matching::Matching(std::vector<VertexSet> edges) : edges_(std::move(edges)) {
    VertexSet seen;
    for (VertexSet e : edges_) {
        if (e.intersects(seen))
            throw std::invalid_argument("matching edges overlap at " + (e & seen).to_string());
        seen |= e;
    }
}

VertexSet Matching::covered() const {
    VertexSet s;
    for (VertexSet e : edges_) s |= e;
    return s;
}

int degree(const Hypergraph& f, VertexSet w) {
    int d = 0;
    for (VertexSet e : f.edges())
        if (w.subset_of(e)) ++d;
    return d;
}

Hypergraph link(const Hypergraph& f, VertexSet w) {
    if (w.size() >= f.k())
        throw std::invalid_argument("link set " + w.to_string() + " must have fewer than k vertices");
    Hypergraph out(f.k() - w.size(), f.n());
    for (VertexSet e : f.edges())
        if (w.subset_of(e)) out.add_edge(e - w);
    return out;
}

namespace {

// Branch and bound for set packing: branch on the lowest vertex still seen
// by an available edge, either through one of its edges or by discarding
// the vertex outright.
class MatchingSearch {
public:
    explicit MatchingSearch(const Hypergraph& f) : f_(f) {}

    int maximum() {
        best_ = 0;
        dfs(VertexSet{}, 0);
        return best_;
    }

    // Can `need` pairwise disjoint edges be chosen from index `from` on,
    // avoiding `used`? Drives the lexicographically least witness below.
    bool feasible(int from, VertexSet used, int need) {
        if (need <= 0) return true;
        VertexSet avail;
        int avail_count = 0;
        for (int i = from; i < f_.edge_count(); ++i) {
            if (!f_.edge(i).intersects(used)) {
                avail |= f_.edge(i);
                ++avail_count;
            }
        }
        if (avail_count < need || avail.size() / f_.k() < need) return false;
        const int v = avail.min();
        for (int i = from; i < f_.edge_count(); ++i) {
            const VertexSet e = f_.edge(i);
            if (e.contains(v) && !e.intersects(used) && feasible(from, used | e, need - 1))
                return true;
        }
        return feasible(from, used | VertexSet::single(v), need);
    }

private:
    void dfs(VertexSet used, int count) {
        best_ = std::max(best_, count);
        VertexSet avail;
        int avail_count = 0;
        for (VertexSet e : f_.edges()) {
            if (!e.intersects(used)) {
                avail |= e;
                ++avail_count;
            }
        }
        if (avail.empty()) return;
        if (count + std::min(avail_count, avail.size() / f_.k()) <= best_) return;
        const int v = avail.min();
        for (VertexSet e : f_.edges())
            if (e.contains(v) && !e.intersects(used)) dfs(used | e, count + 1);
        dfs(used | VertexSet::single(v), count);
    }

    const Hypergraph& f_;
    int best_ = 0;
};

}  // namespace

MatchingResult matching_number(const Hypergraph& f) {
    MatchingSearch search(f);
    const int value = search.maximum();
    std::vector<VertexSet> picked;
    VertexSet used;
    int need = value;
    for (int i = 0; i < f.edge_count() && need > 0; ++i) {
        const VertexSet e = f.edge(i);
        if (e.intersects(used)) continue;
        if (search.feasible(i + 1, used | e, need - 1)) {
            picked.push_back(e);
            used |= e;
            --need;
        }
    }
    return MatchingResult{value, Matching(std::move(picked))};
}

bool is_valid_delta_system(const Hypergraph& f, const DeltaSystem& d) {
    VertexSet seen;
    for (VertexSet p : d.petals) {
        if (p.intersects(d.kernel) || p.intersects(seen)) return false;
        if (!f.has_edge(d.kernel | p)) return false;
        seen |= p;
    }
    return true;
}

KernelDegreeResult kernel_degree(const Hypergraph& f, VertexSet w) {
    const MatchingResult link_matching = matching_number(link(f, w));
    return KernelDegreeResult{link_matching.value,
                              DeltaSystem{w, link_matching.witness.edges()}};
}

namespace {

class TransversalSearch {
public:
    explicit TransversalSearch(const Hypergraph& f) : f_(f) {}

    int minimum() {
        best_ = f_.edge_count() > 0 ? f_.n() : 0;
        dfs(VertexSet{}, VertexSet{});
        return best_;
    }

    // Is there a transversal of size at most budget containing `chosen` and
    // avoiding `rejected`?
    bool feasible(VertexSet chosen, VertexSet rejected, int budget) {
        const int uncovered = first_uncovered(chosen);
        if (uncovered < 0) return chosen.size() <= budget;
        if (chosen.size() + greedy_disjoint(chosen) > budget) return false;
        for (int v : f_.edge(uncovered) - rejected)
            if (feasible(chosen | VertexSet::single(v), rejected, budget)) return true;
        return false;
    }

private:
    int first_uncovered(VertexSet s) const {
        for (int i = 0; i < f_.edge_count(); ++i)
            if (!f_.edge(i).intersects(s)) return i;
        return -1;
    }

    // Greedy count of pairwise disjoint uncovered edges: each needs its own
    // new transversal vertex, a cheap admissible lower bound.
    int greedy_disjoint(VertexSet s) const {
        VertexSet blocked = s;
        int count = 0;
        for (VertexSet e : f_.edges()) {
            if (!e.intersects(blocked)) {
                ++count;
                blocked |= e;
            }
        }
        return count;
    }

    void dfs(VertexSet chosen, VertexSet rejected) {
        const int uncovered = first_uncovered(chosen);
        if (uncovered < 0) {
            best_ = std::min(best_, chosen.size());
            return;
        }
        if (chosen.size() + greedy_disjoint(chosen) >= best_) return;
        for (int v : f_.edge(uncovered) - rejected)
            dfs(chosen | VertexSet::single(v), rejected);
    }

    const Hypergraph& f_;
    int best_ = 0;
};

}  // namespace

TransversalResult transversal_number(const Hypergraph& f) {
    TransversalSearch search(f);
    const int value = search.minimum();
    VertexSet chosen, rejected;
    for (int v = 0; v < f.n() && chosen.size() < value; ++v) {
        if (search.feasible(chosen | VertexSet::single(v), rejected, value))
            chosen.add(v);
        else
            rejected.add(v);
    }
    return TransversalResult{value, chosen};
}

namespace {

// Exact 1-cross-cut search, driven by the first edge not yet hit: each
// branch designates the vertex that will be the edge's unique point of
// contact. A vertex qualifies only while all of its edges are still unhit.
class CrossCutSearch {
public:
    explicit CrossCutSearch(const Hypergraph& f) : f_(f), incidence_(f.incidence()) {}

    std::optional<int> minimum() {
        best_ = -1;
        dfs_min(VertexSet{}, 0);
        if (best_ < 0) return std::nullopt;
        return best_;
    }

    bool feasible(VertexSet chosen, VertexSet rejected, int budget) {
        for (VertexSet e : f_.edges())
            if ((e & chosen).size() > 1) return false;
        return dfs_decide(chosen, rejected, budget);
    }

private:
    int hits(VertexSet y, int edge) const { return (f_.edge(edge) & y).size(); }

    int first_unhit(VertexSet y) const {
        for (int i = 0; i < f_.edge_count(); ++i)
            if (hits(y, i) == 0) return i;
        return -1;
    }

    bool vertex_ok(VertexSet y, int v) const {
        for (int e : incidence_[static_cast<std::size_t>(v)])
            if (hits(y, e) != 0) return false;
        return true;
    }

    void dfs_min(VertexSet y, int size) {
        const int edge = first_unhit(y);
        if (edge < 0) {
            if (best_ < 0 || size < best_) best_ = size;
            return;
        }
        if (best_ >= 0 && size + 1 >= best_) return;
        for (int v : f_.edge(edge))
            if (vertex_ok(y, v)) dfs_min(y | VertexSet::single(v), size + 1);
    }

    bool dfs_decide(VertexSet y, VertexSet rejected, int budget) {
        const int edge = first_unhit(y);
        if (edge < 0) return y.size() <= budget;
        if (y.size() + 1 > budget) return false;
        for (int v : f_.edge(edge) - rejected)
            if (vertex_ok(y, v) && dfs_decide(y | VertexSet::single(v), rejected, budget))
                return true;
        return false;
    }

    const Hypergraph& f_;
    std::vector<std::vector<int>> incidence_;
    int best_ = -1;
};

}  // namespace

CrossCutResult one_cross_cut_number(const Hypergraph& f) {
    CrossCutSearch search(f);
    const std::optional<int> value = search.minimum();
    if (!value) return CrossCutResult{std::nullopt, VertexSet{}};
    VertexSet chosen, rejected;
    for (int v = 0; v < f.n() && chosen.size() < *value; ++v) {
        if (search.feasible(chosen | VertexSet::single(v), rejected, *value))
            chosen.add(v);
        else
            rejected.add(v);
    }
    return CrossCutResult{value, chosen};
}

}  // namespace turan
