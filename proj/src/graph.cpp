#include "turan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > VertexSet::max_universe)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v)
        throw std::invalid_argument("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const std::pair<int, int> e{u, v};
    const auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (pos != edges_.end() && *pos == e)
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges_.insert(pos, e);
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

VertexSet Graph::support() const {
    VertexSet s;
    for (auto [u, v] : edges_) {
        s.add(u);
        s.add(v);
    }
    return s;
}

Hypergraph Graph::to_hypergraph() const {
    Hypergraph h(2, n_);
    for (auto [u, v] : edges_) h.add_edge(VertexSet::of({u, v}));
    return h;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

bool is_forest(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : g.edges()) {
        const int ru = uf_find(parent, u);
        const int rv = uf_find(parent, v);
        if (ru == rv) return false;
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
}

Forest::Forest(Graph g) : g_(std::move(g)) {
    if (!is_forest(g_)) throw std::invalid_argument("graph contains a cycle");
    components_ = g_.n() - g_.edge_count();
}

IndependentSetRange::IndependentSetRange(const Forest& t) : g_(t.graph()) {
    if (g_.n() > 32)
        throw std::invalid_argument("independent set enumeration limited to 32 vertices");
    limit_ = std::uint64_t{1} << g_.n();
}

IndependentSetRange::iterator::iterator(const Graph* g, std::uint64_t mask, std::uint64_t limit)
    : g_(g), mask_(mask), limit_(limit) {}

bool IndependentSetRange::iterator::independent() const {
    const VertexSet s = VertexSet::from_bits(mask_);
    for (int v : s)
        if (g_->adjacency(v).intersects(s)) return false;
    return true;
}

IndependentSetRange::iterator& IndependentSetRange::iterator::operator++() {
    ++mask_;
    while (mask_ < limit_ && !independent()) ++mask_;
    if (mask_ > limit_) mask_ = limit_;
    return *this;
}

IndependentSetRange::iterator IndependentSetRange::begin() const {
    return iterator(&g_, 0, limit_);  // the empty set is always independent
}

IndependentSetRange::iterator IndependentSetRange::end() const {
    return iterator(&g_, limit_, limit_);
}

IndependentSetRange independent_sets(const Forest& t) { return IndependentSetRange(t); }

long long forest_turan_upper(int v, long long n) {
    if (v < 2) throw std::invalid_argument("forest order must be at least 2");
    return static_cast<long long>(v - 2) * n;
}

std::optional<PeelResult> min_degree_peel(const Graph& g, int delta) {
    if (delta < 1) throw std::invalid_argument("peel threshold must be positive");
    VertexSet kept = VertexSet::range(0, g.n());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : kept) {
            if ((g.adjacency(v) & kept).size() < delta) {
                kept.remove(v);
                changed = true;
            }
        }
    }
    if (kept.empty()) return std::nullopt;
    Graph induced(g.n());
    for (auto [u, v] : g.edges())
        if (kept.contains(u) && kept.contains(v)) induced.add_edge(u, v);
    return PeelResult{kept, std::move(induced)};
}

namespace {

// Pattern vertices in per-component BFS order, each component rooted at its
// smallest vertex, components listed by root. Every non-root is preceded by
// its parent.
struct ForestOrder {
    std::vector<int> order;
    std::vector<int> parent;  // -1 for component roots
};

ForestOrder forest_order(const Graph& t) {
    ForestOrder fo;
    fo.parent.assign(static_cast<std::size_t>(t.n()), -1);
    VertexSet seen;
    for (int r = 0; r < t.n(); ++r) {
        if (seen.contains(r)) continue;
        seen.add(r);
        std::size_t head = fo.order.size();
        fo.order.push_back(r);
        while (head < fo.order.size()) {
            const int u = fo.order[head++];
            for (int w : t.adjacency(u)) {
                if (seen.contains(w)) continue;
                seen.add(w);
                fo.parent[static_cast<std::size_t>(w)] = u;
                fo.order.push_back(w);
            }
        }
    }
    return fo;
}

bool embed_exhaustive(const Graph& host, const Graph& t, const ForestOrder& fo,
                      std::size_t pos, std::vector<int>& image, VertexSet used) {
    if (pos == fo.order.size()) return true;
    const int pv = fo.order[pos];
    const int par = fo.parent[static_cast<std::size_t>(pv)];
    VertexSet candidates = (par < 0) ? VertexSet::range(0, host.n())
                                     : host.adjacency(image[static_cast<std::size_t>(par)]);
    candidates -= used;
    for (int hv : candidates) {
        image[static_cast<std::size_t>(pv)] = hv;
        if (embed_exhaustive(host, t, fo, pos + 1, image, used | VertexSet::single(hv)))
            return true;
    }
    image[static_cast<std::size_t>(pv)] = -1;
    return false;
}

}  // namespace

std::optional<std::vector<int>> embed_tree_greedy(const Graph& host, const Forest& t) {
    const int v = t.graph().n();
    if (v == 0) return std::vector<int>{};
    const ForestOrder fo = forest_order(t.graph());
    std::vector<int> image(static_cast<std::size_t>(v), -1);

    if (v >= 2) {
        if (auto peeled = min_degree_peel(host, v - 1)) {
            // Min degree v-1 on the kept set makes the greedy sweep total:
            // at most v-1 images are in the way of any attachment.
            VertexSet used;
            for (int pv : fo.order) {
                const int par = fo.parent[static_cast<std::size_t>(pv)];
                VertexSet candidates =
                    (par < 0) ? peeled->kept
                              : (peeled->induced.adjacency(image[static_cast<std::size_t>(par)]) & peeled->kept);
                candidates -= used;
                const int hv = candidates.min();
                if (hv < 0) throw std::logic_error("greedy embedding starved below the peel bound");
                image[static_cast<std::size_t>(pv)] = hv;
                used.add(hv);
            }
            return image;
        }
    }

    if (host.n() < v) return std::nullopt;
    if (embed_exhaustive(host, t.graph(), fo, 0, image, VertexSet{})) return image;
    return std::nullopt;
}

}  // namespace turan
