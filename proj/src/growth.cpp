#include "turan/growth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turan {

GrowthSequence::GrowthSequence(int k) : k_(k) {
    if (k < 2 || k > VertexSet::max_universe)
        throw std::invalid_argument("growth uniformity out of range: " + std::to_string(k));
}

GrowthSequence::GrowthSequence(int k, std::vector<GrowthStep> steps) : GrowthSequence(k) {
    steps_ = std::move(steps);
}

void GrowthSequence::push(VertexSet edge, VertexSet defining) {
    steps_.push_back(GrowthStep{edge, defining});
}

VertexSet GrowthSequence::span() const {
    VertexSet s;
    for (const GrowthStep& st : steps_) s |= st.edge;
    return s;
}

bool validate_growth(const GrowthSequence& seq) {
    const int k = seq.k();
    VertexSet seen;
    for (int i = 0; i < seq.edge_count(); ++i) {
        const GrowthStep& st = seq.step(i);
        if (st.edge.size() != k) return false;
        if (!st.defining.subset_of(st.edge)) return false;
        if (st.defining.size() > k - 1) return false;
        if (i == 0) {
            if (!st.defining.empty()) return false;
        } else {
            // the new edge meets the old vertices in exactly the defining
            // set, which must sit inside a single earlier edge
            if ((st.edge & seen) != st.defining) return false;
            bool anchored = st.defining.empty();
            for (int j = 0; j < i && !anchored; ++j)
                anchored = st.defining.subset_of(seq.step(j).edge);
            if (!anchored) return false;
        }
        seen |= st.edge;
    }
    return true;
}

namespace {

void require_valid(const GrowthSequence& seq) {
    if (!validate_growth(seq))
        throw std::invalid_argument("invalid growth sequence");
}

}  // namespace

bool is_linear(const GrowthSequence& seq) {
    require_valid(seq);
    for (const GrowthStep& st : seq.steps())
        if (st.defining.size() > 1) return false;
    return true;
}

bool is_tight(const GrowthSequence& seq) {
    require_valid(seq);
    for (int i = 1; i < seq.edge_count(); ++i) {
        const int a = seq.step(i).defining.size();
        if (a != 0 && a != seq.k() - 1) return false;
    }
    return true;
}

GrowthSequence tight_completion(const GrowthSequence& seq) {
    require_valid(seq);
    if (seq.edge_count() == 0)
        throw std::invalid_argument("cannot complete an empty sequence");
    const int k = seq.k();
    std::vector<GrowthStep> steps(seq.steps().begin(), seq.steps().end());

    // Each pass finds the first deficient edge and inserts one edge in front
    // of it, on already present vertices, raising that defining set by one.
    // The deficiency sum drops every time, so this terminates.
    while (true) {
        int i = 1;
        while (i < static_cast<int>(steps.size()) &&
               steps[static_cast<std::size_t>(i)].defining.size() == k - 1)
            ++i;
        if (i >= static_cast<int>(steps.size())) break;

        GrowthStep& deficient = steps[static_cast<std::size_t>(i)];
        int anchor = -1;
        for (int j = 0; j < i && anchor < 0; ++j)
            if (deficient.defining.subset_of(steps[static_cast<std::size_t>(j)].edge)) anchor = j;
        const VertexSet anchor_edge = steps[static_cast<std::size_t>(anchor)].edge;

        const int x = (anchor_edge - deficient.defining).min();
        const int y = (deficient.edge - deficient.defining).min();
        const VertexSet inserted = (anchor_edge - VertexSet::single(x)) | VertexSet::single(y);

        deficient.defining.add(y);
        steps.insert(steps.begin() + i,
                     GrowthStep{inserted, inserted - VertexSet::single(y)});
    }

    GrowthSequence out(k, std::move(steps));
    if (!validate_growth(out) || out.span() != seq.span())
        throw std::logic_error("tight completion produced a malformed sequence");
    return out;
}

namespace {

std::vector<int> dense_labels(VertexSet span) {
    std::vector<int> label(VertexSet::max_universe, -1);
    int next = 0;
    for (int v : span) label[static_cast<std::size_t>(v)] = next++;
    return label;
}

VertexSet relabel(VertexSet s, const std::vector<int>& label) {
    VertexSet out;
    for (int v : s) out.add(label[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace

Hypergraph growth_to_hypergraph(const GrowthSequence& seq) {
    const VertexSet span = seq.span();
    const std::vector<int> label = dense_labels(span);
    Hypergraph out(seq.k(), span.size());
    for (const GrowthStep& st : seq.steps()) out.add_edge(relabel(st.edge, label));
    return out;
}

GrowthSequence relabel_dense(const GrowthSequence& seq) {
    const std::vector<int> label = dense_labels(seq.span());
    GrowthSequence out(seq.k());
    for (const GrowthStep& st : seq.steps())
        out.push(relabel(st.edge, label), relabel(st.defining, label));
    return out;
}

GrowthSequence linear_path_growth(int k, int ell) {
    if (k < 2 || ell < 1) throw std::invalid_argument("linear path needs k >= 2, ell >= 1");
    GrowthSequence seq(k);
    for (int i = 0; i < ell; ++i) {
        const int lo = i * (k - 1);
        const VertexSet edge = VertexSet::range(lo, lo + k);
        seq.push(edge, i == 0 ? VertexSet{} : VertexSet::single(lo));
    }
    return seq;
}

GrowthSequence tight_path_growth(int k, int q) {
    if (k < 2 || q < 1) throw std::invalid_argument("tight path needs k >= 2, q >= 1");
    GrowthSequence seq(k);
    for (int i = 0; i < q; ++i) {
        const VertexSet edge = VertexSet::range(i, i + k);
        seq.push(edge, i == 0 ? VertexSet{} : VertexSet::range(i, i + k - 1));
    }
    return seq;
}

ExpandedForest expand(const Graph& base, int k) {
    if (k < 2) throw std::invalid_argument("expansion needs k >= 2");
    const int p = base.n();
    const int q = base.edge_count();
    const int total = p + q * (k - 2);
    if (total > VertexSet::max_universe)
        throw std::invalid_argument("expansion exceeds the vertex universe");
    Hypergraph result(k, total);
    std::vector<VertexSet> fresh;
    fresh.reserve(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        const auto [u, v] = base.edges()[static_cast<std::size_t>(j)];
        const VertexSet priv = VertexSet::range(p + j * (k - 2), p + (j + 1) * (k - 2));
        result.add_edge(VertexSet::of({u, v}) | priv);
        fresh.push_back(priv);
    }
    return ExpandedForest{base, k, std::move(result), std::move(fresh)};
}

namespace {

// Minimizes |X| + e(T - X) over independent X, deciding vertices from the
// highest down with the exclude branch first, so states are reached in
// increasing bitmask order and the recorded witness is the smallest mask.
class SigmaSearch {
public:
    explicit SigmaSearch(const Graph& g) : g_(g) {}

    SigmaResult run() {
        best_ = g_.edge_count() + 1;
        descend(g_.n() - 1, VertexSet{}, VertexSet{});
        return SigmaResult{best_, witness_};
    }

private:
    // decided: vertices already fixed (in X or not); x: the chosen ones
    int surviving_edges(VertexSet decided, VertexSet x) const {
        int count = 0;
        for (auto [u, v] : g_.edges())
            if (decided.contains(u) && decided.contains(v) && !x.contains(u) && !x.contains(v))
                ++count;
        return count;
    }

    void descend(int v, VertexSet decided, VertexSet x) {
        if (x.size() + surviving_edges(decided, x) >= best_) return;
        if (v < 0) {
            best_ = x.size() + surviving_edges(decided, x);
            witness_ = x;
            return;
        }
        const VertexSet dv = decided | VertexSet::single(v);
        descend(v - 1, dv, x);
        if (!g_.adjacency(v).intersects(x)) descend(v - 1, dv, x | VertexSet::single(v));
    }

    const Graph& g_;
    int best_ = 0;
    VertexSet witness_;
};

}  // namespace

SigmaResult sigma(const Forest& t) {
    if (t.graph().edge_count() == 0)
        throw std::invalid_argument("sigma needs at least one edge");
    return SigmaSearch(t.graph()).run();
}

Hypergraph matching_family(int k, int nu) {
    if (k < 2 || nu < 1) throw std::invalid_argument("matching family needs k >= 2, nu >= 1");
    Hypergraph out(k, k * nu);
    for (int i = 0; i < nu; ++i) out.add_edge(VertexSet::range(i * k, (i + 1) * k));
    return out;
}

Hypergraph linear_path(int k, int ell) {
    return growth_to_hypergraph(linear_path_growth(k, ell));
}

Hypergraph linear_star(int k, int ell) {
    if (k < 2 || ell < 1) throw std::invalid_argument("linear star needs k >= 2, ell >= 1");
    Hypergraph out(k, 1 + ell * (k - 1));
    for (int i = 0; i < ell; ++i)
        out.add_edge(VertexSet::single(0) | VertexSet::range(1 + i * (k - 1), 1 + (i + 1) * (k - 1)));
    return out;
}

Graph path_graph(int ell) {
    if (ell < 1) throw std::invalid_argument("path needs at least one edge");
    Graph g(ell + 1);
    for (int i = 0; i < ell; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int ell) {
    if (ell < 1) throw std::invalid_argument("star needs at least one edge");
    Graph g(ell + 1);
    for (int i = 1; i <= ell; ++i) g.add_edge(0, i);
    return g;
}

Forest example_tree_sec4(int d, int c) {
    if (c < 1 || d <= c)
        throw std::invalid_argument("caterpillar needs d > c >= 1");
    // spine a1=0, b1=1, b2=2, a2=3; leaves appended in spine order
    Graph g(4 + 2 * d + 2 * c);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    int next = 4;
    for (int i = 0; i < d; ++i) g.add_edge(0, next++);
    for (int i = 0; i < c; ++i) g.add_edge(1, next++);
    for (int i = 0; i < c; ++i) g.add_edge(2, next++);
    for (int i = 0; i < d; ++i) g.add_edge(3, next++);
    return Forest(std::move(g));
}

}  // namespace turan
