#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"
#include "turan/growth.hpp"

using turan::Forest;
using turan::Graph;
using turan::VertexSet;

TEST_CASE("graph edges are normalized and validated") {
    Graph g(5);
    g.add_edge(3, 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(1, 3), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);  // outside
    g.add_edge(0, 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
    CHECK(g.degree(1) == 2);
    CHECK(g.adjacency(1) == VertexSet::of({0, 3}));
    CHECK(g.support() == VertexSet::of({0, 1, 3}));
}

TEST_CASE("hypergraph view of a graph") {
    const turan::Hypergraph h = turan::path_graph(2).to_hypergraph();
    CHECK(h.k() == 2);
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge(VertexSet::of({0, 1})));
    CHECK(h.has_edge(VertexSet::of({1, 2})));
}

TEST_CASE("forest recognition") {
    CHECK(turan::is_forest(turan::path_graph(4)));
    CHECK(turan::is_forest(Graph(6, {{0, 1}, {2, 3}})));
    CHECK(turan::is_forest(Graph(3)));
    Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(turan::is_forest(triangle));
    CHECK_THROWS_AS(Forest{triangle}, std::invalid_argument);
    CHECK(Forest(turan::path_graph(3)).components() == 1);
    CHECK(Forest(Graph(5, {{0, 1}, {2, 3}})).components() == 3);  // isolated 4 counts
}

TEST_CASE("independent sets of a path enumerate in mask order") {
    const Forest path(turan::path_graph(2));
    std::vector<VertexSet> sets;
    for (VertexSet s : turan::IndependentSetRange(path)) sets.push_back(s);
    REQUIRE(sets.size() == 5);
    CHECK(sets[0] == VertexSet{});
    CHECK(sets[1] == VertexSet::single(0));
    CHECK(sets[2] == VertexSet::single(1));
    CHECK(sets[3] == VertexSet::single(2));
    CHECK(sets[4] == VertexSet::of({0, 2}));

    int count = 0;
    for (VertexSet s : turan::IndependentSetRange(Forest(turan::star_graph(3)))) {
        (void)s;
        ++count;
    }
    CHECK(count == 9);  // 2^3 leaf subsets plus the center
}

TEST_CASE("forest edge bound") {
    CHECK(turan::forest_turan_upper(4, 10) == 20);
    CHECK(turan::forest_turan_upper(2, 7) == 0);
}

TEST_CASE("minimum degree peel") {
    // triangle with a pendant: the 2-core is the triangle
    const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const auto core = turan::min_degree_peel(g, 2);
    REQUIRE(core.has_value());
    CHECK(core->kept == VertexSet::of({0, 1, 2}));
    CHECK(core->induced.edges().size() == 3);

    CHECK_FALSE(turan::min_degree_peel(turan::path_graph(3), 2).has_value());

    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto whole = turan::min_degree_peel(k4, 3);
    REQUIRE(whole.has_value());
    CHECK(whole->kept == VertexSet::range(0, 4));
}

TEST_CASE("greedy tree embedding into dense hosts") {
    const Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                       {2, 3}, {2, 4}, {3, 4}});
    for (const Graph& t : {turan::path_graph(4), turan::star_graph(4)}) {
        const auto map = turan::embed_tree_greedy(k5, Forest(t));
        REQUIRE(map.has_value());
        REQUIRE(map->size() == 5);
        std::vector<bool> hit(5, false);
        for (const int hv : *map) {
            REQUIRE(hv >= 0);
            REQUIRE(hv < 5);
            CHECK_FALSE(hit[static_cast<std::size_t>(hv)]);
            hit[static_cast<std::size_t>(hv)] = true;
        }
        for (auto [u, v] : t.edges())
            CHECK(k5.has_edge((*map)[static_cast<std::size_t>(u)],
                              (*map)[static_cast<std::size_t>(v)]));
    }

    // too few host vertices
    CHECK_FALSE(turan::embed_tree_greedy(turan::path_graph(3), Forest(turan::path_graph(4)))
                    .has_value());
    // sparse host, exact fallback: a path fits inside a path
    const auto self = turan::embed_tree_greedy(turan::path_graph(3), Forest(turan::path_graph(3)));
    CHECK(self.has_value());
    // a star does not fit in a path
    CHECK_FALSE(turan::embed_tree_greedy(turan::path_graph(4), Forest(turan::star_graph(3)))
                    .has_value());
}
