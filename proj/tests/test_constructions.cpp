#include <doctest.h>

#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/embed.hpp"

using turan::Forest;
using turan::Hypergraph;
using turan::VertexSet;

TEST_CASE("cross join of disjoint families") {
    const Hypergraph a(1, 2, {VertexSet::single(0), VertexSet::single(1)});
    const Hypergraph b(2, 5, {VertexSet::of({2, 3}), VertexSet::of({3, 4})});
    const Hypergraph j = turan::join(a, b);
    CHECK(j.k() == 3);
    CHECK(j.edge_count() == 4);
    CHECK(j.has_edge(VertexSet::of({0, 2, 3})));
    CHECK(j.has_edge(VertexSet::of({1, 3, 4})));

    const Hypergraph clash(2, 5, {VertexSet::of({1, 2})});
    CHECK_THROWS_AS(turan::join(a, clash), std::invalid_argument);
}

TEST_CASE("cross family sizes and freeness") {
    const Forest path3(turan::path_graph(3));
    const Hypergraph fam = turan::lower_bound_family(6, 3, path3);
    CHECK(fam.edge_count() == 10);  // sigma = 2: all triples through vertex 0
    for (VertexSet e : fam.edges()) CHECK((e & VertexSet::single(0)).size() == 1);

    const Hypergraph big = turan::lower_bound_family(9, 3, path3);
    CHECK(big.edge_count() == turan::binomial(8, 2));
    CHECK_FALSE(turan::contains(big, turan::expand(turan::path_graph(3), 3).result)
                    .has_value());

    const Forest cat = turan::example_tree_sec4(2, 1);  // sigma 5
    const Hypergraph wide = turan::lower_bound_family(10, 3, cat);
    CHECK(wide.edge_count() == 4 * turan::binomial(6, 2));
    for (VertexSet e : wide.edges()) CHECK((e & VertexSet::range(0, 4)).size() == 1);

    CHECK_THROWS_AS(turan::lower_bound_family(5, 3, cat), std::invalid_argument);
}

TEST_CASE("matching bound and its extremal family") {
    CHECK(turan::erdos_matching_bound(6, 3, 1) == 10);
    CHECK(turan::erdos_matching_bound(7, 3, 2) == 25);
    const Hypergraph fam = turan::matching_extremal_family(7, 3, 2);
    CHECK(fam.edge_count() == 25);
    CHECK(turan::matching_number(fam).value == 2);
    for (VertexSet e : fam.edges()) CHECK(e.intersects(VertexSet::range(0, 2)));

    using Convention = turan::MatchingCoefficientConvention;
    CHECK(turan::matching_asymptotic_coefficient(3, Convention::as_printed) == 3);
    CHECK(turan::matching_asymptotic_coefficient(3, Convention::forbidden_pattern_shift) == 2);
}

TEST_CASE("path extremal family counts match the closed form") {
    CHECK(turan::path_extremal_value(7, 3, 3) == 15);       // C(6,2)
    CHECK(turan::path_extremal_value(7, 3, 4) == 15 + 4);   // + C(4,1)
    CHECK(turan::path_extremal_value(5, 3, 2) == 3);        // C(3,1)
    for (int n = 6; n <= 9; ++n)
        for (int ell = 2; ell <= 5; ++ell)
            CHECK(turan::path_extremal_family(n, 3, ell).edge_count() ==
                  turan::path_extremal_value(n, 3, ell));
    CHECK(turan::path_extremal_family(8, 4, 3).edge_count() ==
          turan::path_extremal_value(8, 4, 3));
}

TEST_CASE("star coefficient") {
    CHECK(turan::star_phi(1) == 0);
    CHECK(turan::star_phi(2) == 1);
    CHECK(turan::star_phi(3) == 6);
    CHECK(turan::star_phi(4) == 10);
    CHECK(turan::star_phi(5) == 20);
    CHECK_THROWS_AS(turan::star_phi(0), std::invalid_argument);
}

TEST_CASE("tight forest edge bound") {
    CHECK(turan::forest_turan_bound(5, 3, 6) == 2 * 15);
    CHECK(turan::forest_turan_bound(3, 3, 6) == 0);
    CHECK_THROWS_AS(turan::forest_turan_bound(2, 3, 6), std::invalid_argument);
}

TEST_CASE("greedy packing keeps intersections small") {
    const auto packing = turan::greedy_packing(8, 2, 0);
    CHECK(packing.size() == 4);  // a perfect matching of pairs
    const auto blocks = turan::greedy_packing(9, 4, 1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        CHECK(blocks[i].size() == 4);
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            CHECK((blocks[i] & blocks[j]).size() <= 1);
    }
}

TEST_CASE("packed clique family avoids tight trees") {
    const Hypergraph fam = turan::kalai_packing_family(9, 3, 5);
    CHECK_FALSE(fam.empty());
    // blocks have v - 1 = 4 vertices and pairwise share at most k - 2 = 1,
    // so no edge pair from different blocks shares 2 vertices
    for (VertexSet e : fam.edges()) CHECK(e.size() == 3);
    CHECK_FALSE(turan::contains(fam, turan::growth_to_hypergraph(turan::tight_path_growth(3, 3)))
                    .has_value());
    // v - 1 below k leaves nothing to pack
    CHECK(turan::kalai_packing_family(9, 3, 3).empty());
}
