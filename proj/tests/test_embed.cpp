#include <doctest.h>

#include <stdexcept>

#include "turan/embed.hpp"
#include "turan/kernel_graph.hpp"
#include "turan/verify.hpp"

using turan::Embedding;
using turan::Forest;
using turan::Graph;
using turan::GrowthSequence;
using turan::Hypergraph;
using turan::VertexSet;

TEST_CASE("containment finds and validates embeddings") {
    const Hypergraph host = turan::complete_hypergraph(3, 5);
    const auto emb = turan::contains(host, turan::linear_path(3, 2));
    REQUIRE(emb.has_value());
    CHECK(turan::validate_embedding(host, turan::linear_path(3, 2), *emb));

    CHECK_FALSE(turan::contains(turan::linear_star(3, 3), turan::matching_family(3, 2))
                    .has_value());
    CHECK_FALSE(turan::contains(turan::matching_family(3, 2), turan::linear_path(3, 2))
                    .has_value());
    // more pattern vertices than the host offers
    CHECK_FALSE(turan::contains(turan::complete_hypergraph(3, 4), turan::linear_path(3, 2))
                    .has_value());
    CHECK_THROWS_AS(turan::contains(host, turan::matching_family(4, 1)), std::invalid_argument);
}

TEST_CASE("containment matches the all-injections oracle on fixed pairs") {
    const Hypergraph hosts[] = {turan::complete_hypergraph(3, 5), turan::linear_star(3, 3),
                                turan::counterexample_f3(2), turan::linear_path(3, 3)};
    const Hypergraph patterns[] = {turan::linear_path(3, 1), turan::linear_path(3, 2),
                                   turan::matching_family(3, 2), turan::linear_star(3, 2)};
    for (const Hypergraph& h : hosts)
        for (const Hypergraph& p : patterns)
            CHECK(turan::contains(h, p).has_value() == turan::naive_contains(h, p));
}

TEST_CASE("embedding validation rejects broken witnesses") {
    const Hypergraph host = turan::complete_hypergraph(3, 5);
    const Hypergraph pattern = turan::linear_path(3, 1);
    Embedding emb;
    emb.vertex_map = {0, 1, 2};
    emb.edge_map = {0};
    CHECK(turan::validate_embedding(host, pattern, emb));

    Embedding short_map = emb;
    short_map.vertex_map = {0, 1};
    CHECK_FALSE(turan::validate_embedding(host, pattern, short_map));

    Embedding repeated = emb;
    repeated.vertex_map = {0, 1, 1};
    CHECK_FALSE(turan::validate_embedding(host, pattern, repeated));

    Embedding wrong_edge = emb;
    wrong_edge.edge_map = {3};  // {0,2,3} is not the image of {0,1,2}
    CHECK_FALSE(turan::validate_embedding(host, pattern, wrong_edge));
}

TEST_CASE("containment through a forced host edge") {
    const Hypergraph host = turan::linear_path(3, 3);
    const Hypergraph pattern = turan::linear_path(3, 2);
    // the three path edges: both end edges and the middle one extend to a
    // two-edge subpath
    for (int forced = 0; forced < 3; ++forced)
        CHECK(turan::contains_using_edge(host.edges(), host.n(), pattern, forced));

    const Hypergraph apart = turan::matching_family(3, 2);
    CHECK_FALSE(turan::contains_using_edge(apart.edges(), apart.n(), pattern, 0));
    CHECK_THROWS_AS(turan::contains_using_edge(host.edges(), host.n(), pattern, 3),
                    std::out_of_range);
}

TEST_CASE("shadow peel cascades") {
    const Hypergraph k43 = turan::complete_hypergraph(3, 4);

    const auto quiet = turan::peel_shadow(k43, 1);  // every pair has degree 2
    CHECK(quiet.residue == k43);
    CHECK(quiet.log.empty());

    const auto total = turan::peel_shadow(k43, 2);  // first removal cascades
    CHECK(total.residue.edge_count() == 0);
    int removed = 0;
    for (const auto& entry : total.log) {
        CHECK(entry.x.size() == 2);
        CHECK_FALSE(entry.removed.empty());
        CHECK(static_cast<int>(entry.removed.size()) <= 2);
        removed += static_cast<int>(entry.removed.size());
    }
    CHECK(removed == 4);

    // residue guarantee: surviving (k-1)-sets have degree 0 or above the bar
    const Hypergraph f(3, 6,
                       {VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 3}),
                        VertexSet::of({0, 1, 4}), VertexSet::of({0, 1, 5}),
                        VertexSet::of({2, 3, 4})});
    const auto peeled = turan::peel_shadow(f, 1);
    for (VertexSet pair : turan::lex_ksubsets(6, 2)) {
        const int d = turan::degree(peeled.residue, pair);
        CHECK((d == 0 || d > 1));
    }
}

TEST_CASE("tight forest embedding") {
    const GrowthSequence tp3 = turan::tight_path_growth(3, 3);

    const auto dense = turan::embed_tight_forest(turan::complete_hypergraph(3, 6), tp3);
    REQUIRE(dense.has_value());
    CHECK(turan::validate_embedding(turan::complete_hypergraph(3, 6),
                                    turan::growth_to_hypergraph(tp3), *dense));

    // host equal to the pattern: the peel empties the host and the fallback
    // containment search still finds the identity-shaped embedding
    const Hypergraph self = turan::growth_to_hypergraph(turan::tight_path_growth(3, 4));
    const auto tight_self = turan::embed_tight_forest(self, turan::tight_path_growth(3, 4));
    REQUIRE(tight_self.has_value());
    CHECK(turan::validate_embedding(self, self, *tight_self));

    CHECK_FALSE(turan::embed_tight_forest(turan::complete_hypergraph(3, 4), tp3).has_value());

    // disconnected tight forests go through completion first
    GrowthSequence m(3);
    m.push(VertexSet::of({0, 1, 2}), VertexSet{});
    m.push(VertexSet::of({3, 4, 5}), VertexSet{});
    const auto spread = turan::embed_tight_forest(turan::complete_hypergraph(3, 7), m);
    REQUIRE(spread.has_value());
    CHECK(turan::validate_embedding(turan::complete_hypergraph(3, 7),
                                    turan::growth_to_hypergraph(m), *spread));

    CHECK_THROWS_AS(turan::embed_tight_forest(turan::complete_hypergraph(3, 6),
                                              turan::linear_path_growth(3, 2)),
                    std::invalid_argument);  // not tight
    CHECK_THROWS_AS(turan::embed_tight_forest(turan::complete_hypergraph(4, 6), tp3),
                    std::invalid_argument);  // uniformity mismatch
}

TEST_CASE("kernel-route embedding on a sunflower host") {
    Hypergraph host(3, 6);
    host.add_edge({0, 1, 2});
    host.add_edge({0, 1, 3});
    host.add_edge({0, 1, 4});
    host.add_edge({2, 4, 5});  // noise
    const auto res = turan::embed_expansion_via_kernel(host, turan::path_graph(1));
    CHECK(res.outcome == turan::KernelEmbedOutcome::found);
    CHECK(res.s == 3);  // k * edge count by default
    REQUIRE(res.embedding.has_value());
    CHECK(turan::validate_embedding(host, turan::expand(turan::path_graph(1), 3).result,
                                    *res.embedding));

    // raising the threshold beyond the witness makes the route inconclusive
    const auto high = turan::embed_expansion_via_kernel(host, turan::path_graph(1), 4);
    CHECK(high.outcome == turan::KernelEmbedOutcome::not_found_inconclusive);
    CHECK_FALSE(high.embedding.has_value());
}

TEST_CASE("kernel route is one-sided: the matching-kernel family hides its paths") {
    const Hypergraph f = turan::counterexample_f3(6);
    const Graph h = turan::path_graph(2);
    const auto via_kernel = turan::embed_expansion_via_kernel(f, h);
    CHECK(via_kernel.outcome == turan::KernelEmbedOutcome::not_found_inconclusive);
    // yet the expansion is genuinely present
    CHECK(turan::contains(f, turan::expand(h, 3).result).has_value());
}

TEST_CASE("kernel route edge cases") {
    const Hypergraph host = turan::complete_hypergraph(3, 5);
    const auto edgeless = turan::embed_expansion_via_kernel(host, Graph(3));
    CHECK(edgeless.outcome == turan::KernelEmbedOutcome::found);
    REQUIRE(edgeless.embedding.has_value());
    CHECK(edgeless.embedding->vertex_map.size() == 3);

    CHECK_THROWS_AS(turan::embed_expansion_via_kernel(turan::complete_hypergraph(2, 4),
                                                      turan::path_graph(1)),
                    std::invalid_argument);  // needs k >= 3
}

TEST_CASE("center classification") {
    Hypergraph f(3, 8);
    f.add_edge({0, 1, 2});
    f.add_edge({0, 3, 4});
    f.add_edge({5, 6, 7});
    Graph g2(8);
    g2.add_edge(0, 1);
    g2.add_edge(0, 2);
    g2.add_edge(0, 3);
    g2.add_edge(0, 4);
    const auto parts = turan::classify_centers(f, g2);
    REQUIRE(parts.center.size() == 3);
    CHECK(parts.center[0] == 0);
    CHECK(parts.center[1] == 0);
    CHECK(parts.center[2] == -1);
    CHECK(parts.f1 == std::vector<int>{2});     // centerless
    CHECK(parts.f2 == std::vector<int>{0, 1});  // centered
    CHECK_THROWS_AS(turan::classify_centers(f, Graph(5)), std::invalid_argument);
}
