#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "turan/growth.hpp"

using turan::Forest;
using turan::Graph;
using turan::GrowthSequence;
using turan::Hypergraph;
using turan::VertexSet;

namespace {

// Sigma oracle over every vertex subset, independence checked by hand.
int brute_sigma(const Forest& t) {
    const Graph& g = t.graph();
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
        const VertexSet x = VertexSet::from_bits(mask);
        bool independent = true;
        for (auto [u, v] : g.edges())
            if (x.contains(u) && x.contains(v)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        int untouched = 0;
        for (auto [u, v] : g.edges())
            if (!x.contains(u) && !x.contains(v)) ++untouched;
        const int value = x.size() + untouched;
        if (best < 0 || value < best) best = value;
    }
    return best;
}

}  // namespace

TEST_CASE("growth sequence validation") {
    GrowthSequence good(3);
    good.push(VertexSet::of({0, 1, 2}), VertexSet{});
    good.push(VertexSet::of({2, 3, 4}), VertexSet::single(2));
    CHECK(turan::validate_growth(good));
    CHECK(turan::is_linear(good));
    CHECK_FALSE(turan::is_tight(good));

    // first defining set must be empty
    GrowthSequence bad1(3);
    bad1.push(VertexSet::of({0, 1, 2}), VertexSet::single(0));
    CHECK_FALSE(turan::validate_growth(bad1));

    // defining set must lie inside the new edge
    GrowthSequence bad2(3);
    bad2.push(VertexSet::of({0, 1, 2}), VertexSet{});
    bad2.push(VertexSet::of({3, 4, 5}), VertexSet::single(0));
    CHECK_FALSE(turan::validate_growth(bad2));

    // overlap with earlier vertices must equal the defining set exactly
    GrowthSequence bad3(3);
    bad3.push(VertexSet::of({0, 1, 2}), VertexSet{});
    bad3.push(VertexSet::of({1, 2, 3}), VertexSet::single(1));
    CHECK_FALSE(turan::validate_growth(bad3));

    // defining set must sit inside a single earlier edge
    GrowthSequence bad4(3);
    bad4.push(VertexSet::of({0, 1, 2}), VertexSet{});
    bad4.push(VertexSet::of({2, 3, 4}), VertexSet::single(2));
    bad4.push(VertexSet::of({1, 4, 5}), VertexSet::of({1, 4}));
    CHECK_FALSE(turan::validate_growth(bad4));

    // a defining set of size k is not allowed (duplicate edge territory)
    GrowthSequence bad5(3);
    bad5.push(VertexSet::of({0, 1, 2}), VertexSet{});
    bad5.push(VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 2}));
    CHECK_FALSE(turan::validate_growth(bad5));

    CHECK_THROWS_AS(turan::is_linear(bad1), std::invalid_argument);
    CHECK_THROWS_AS(turan::is_tight(bad1), std::invalid_argument);
    CHECK_THROWS_AS(GrowthSequence(1), std::invalid_argument);
}

TEST_CASE("canned growth sequences") {
    const GrowthSequence lin = turan::linear_path_growth(3, 3);
    CHECK(turan::validate_growth(lin));
    CHECK(turan::is_linear(lin));
    CHECK(lin.edge_count() == 3);
    CHECK(lin.span().size() == 7);
    CHECK(turan::growth_to_hypergraph(lin) == turan::linear_path(3, 3));

    const GrowthSequence tight = turan::tight_path_growth(3, 3);
    CHECK(turan::is_tight(tight));
    const Hypergraph tp = turan::growth_to_hypergraph(tight);
    CHECK(tp.n() == 5);  // v - k + 1 edges: 3 edges on 5 vertices
    CHECK(tp.edge_count() == 3);
    CHECK(tp.has_edge(VertexSet::of({0, 1, 2})));
    CHECK(tp.has_edge(VertexSet::of({1, 2, 3})));
    CHECK(tp.has_edge(VertexSet::of({2, 3, 4})));
}

TEST_CASE("tight completion fills in the missing edges") {
    const GrowthSequence lin = turan::linear_path_growth(3, 2);  // defining sets too small
    const GrowthSequence done = turan::tight_completion(lin);
    CHECK(turan::validate_growth(done));
    CHECK(turan::is_tight(done));
    CHECK(done.span() == lin.span());
    CHECK(done.edge_count() == lin.span().size() - 3 + 1);
    // the original edges survive in order
    int at = 0;
    for (const auto& step : done.steps())
        if (at < lin.edge_count() && step.edge == lin.step(at).edge) ++at;
    CHECK(at == lin.edge_count());
    // exactly one component start remains
    int empties = 0;
    for (const auto& step : done.steps())
        if (step.defining.empty()) ++empties;
    CHECK(empties == 1);

    // a two-edge tight matching completes to a tree as well
    GrowthSequence m(3);
    m.push(VertexSet::of({0, 1, 2}), VertexSet{});
    m.push(VertexSet::of({3, 4, 5}), VertexSet{});
    CHECK(turan::is_tight(m));
    const GrowthSequence mc = turan::tight_completion(m);
    CHECK(turan::is_tight(mc));
    CHECK(mc.edge_count() == 4);  // 6 vertices, k = 3
    CHECK(mc.span() == VertexSet::range(0, 6));

    // already-complete sequences pass through unchanged
    const GrowthSequence tp = turan::tight_path_growth(3, 4);
    CHECK(turan::tight_completion(tp) == tp);
}

TEST_CASE("expansion geometry") {
    const auto ex = turan::expand(turan::path_graph(2), 3);
    CHECK(ex.result.k() == 3);
    CHECK(ex.result.n() == 5);  // 3 base + 2 fresh
    CHECK(ex.result.edge_count() == 2);
    REQUIRE(ex.fresh.size() == 2);
    CHECK(ex.fresh[0].size() == 1);
    CHECK(ex.fresh[1].size() == 1);
    CHECK_FALSE(ex.fresh[0].intersects(ex.fresh[1]));
    CHECK_FALSE((ex.fresh[0] | ex.fresh[1]).intersects(VertexSet::range(0, 3)));

    // expansion at k = 2 is the base graph itself
    const auto flat = turan::expand(turan::star_graph(3), 2);
    CHECK(flat.result == turan::star_graph(3).to_hypergraph());

    const auto big = turan::expand(turan::star_graph(2), 5);
    CHECK(big.result.n() == 3 + 2 * 3);
    for (VertexSet e : big.result.edges()) CHECK(e.size() == 5);
}

TEST_CASE("linear path intersections") {
    const Hypergraph p = turan::linear_path(3, 4);
    CHECK(p.n() == 9);
    REQUIRE(p.edge_count() == 4);
    // consecutive edges share one vertex, the rest are disjoint; the lex
    // edge order of a path expansion keeps the chain order here
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK((p.edge(i) & p.edge(j)).size() == (j == i + 1 ? 1 : 0));
}

TEST_CASE("named families have the advertised shapes") {
    const Hypergraph m = turan::matching_family(3, 2);
    CHECK(m.n() == 6);
    CHECK(m.edge_count() == 2);
    CHECK(m.has_edge(VertexSet::of({0, 1, 2})));
    CHECK(m.has_edge(VertexSet::of({3, 4, 5})));

    const Hypergraph s = turan::linear_star(3, 2);
    CHECK(s.n() == 5);
    CHECK(s.has_edge(VertexSet::of({0, 1, 2})));
    CHECK(s.has_edge(VertexSet::of({0, 3, 4})));

    CHECK(turan::path_graph(3).edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(turan::star_graph(3).degree(0) == 3);
    CHECK_THROWS_AS(turan::matching_family(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(turan::path_graph(0), std::invalid_argument);
}

TEST_CASE("sigma on paths, stars and caterpillars") {
    const int path_expected[] = {1, 1, 2, 2, 3, 3};  // ceil(ell / 2)
    for (int ell = 1; ell <= 6; ++ell) {
        const Forest t(turan::path_graph(ell));
        CHECK(turan::sigma(t).value == path_expected[ell - 1]);
        CHECK(turan::sigma(t).value == brute_sigma(t));
    }
    for (int ell = 1; ell <= 5; ++ell)
        CHECK(turan::sigma(Forest(turan::star_graph(ell))).value == 1);

    CHECK(turan::sigma(turan::example_tree_sec4(2, 1)).value == 5);
    CHECK(turan::sigma(turan::example_tree_sec4(3, 1)).value == 5);
    CHECK(turan::sigma(turan::example_tree_sec4(3, 2)).value == 7);
    CHECK(turan::sigma(turan::example_tree_sec4(3, 2)).value ==
          brute_sigma(turan::example_tree_sec4(3, 2)));

    // witness soundness
    const Forest cat = turan::example_tree_sec4(3, 1);
    const auto res = turan::sigma(cat);
    for (auto [u, v] : cat.graph().edges())
        CHECK_FALSE((res.witness.contains(u) && res.witness.contains(v)));
    int untouched = 0;
    for (auto [u, v] : cat.graph().edges())
        if (!res.witness.contains(u) && !res.witness.contains(v)) ++untouched;
    CHECK(res.value == res.witness.size() + untouched);

    CHECK_THROWS_AS(turan::sigma(Forest(Graph(3))), std::invalid_argument);
    CHECK_THROWS_AS(turan::example_tree_sec4(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(turan::example_tree_sec4(2, 0), std::invalid_argument);
}

TEST_CASE("dense relabeling") {
    GrowthSequence gaps(3);
    gaps.push(VertexSet::of({0, 5, 9}), VertexSet{});
    gaps.push(VertexSet::of({9, 11, 13}), VertexSet::single(9));
    const GrowthSequence dense = turan::relabel_dense(gaps);
    CHECK(dense.span() == VertexSet::range(0, 5));
    CHECK(turan::validate_growth(dense));
    CHECK(turan::relabel_dense(dense) == dense);
    CHECK(turan::growth_to_hypergraph(gaps) == turan::growth_to_hypergraph(dense));
}
