#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "turan/vertex_set.hpp"

using turan::VertexSet;

TEST_CASE("vertex set construction and membership") {
    const VertexSet s = VertexSet::of({0, 2, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(0));
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(1));
    CHECK_FALSE(s.contains(63));
    CHECK(s.min() == 0);
    CHECK(s.max() == 5);
    CHECK(VertexSet{}.empty());
    CHECK(VertexSet{}.min() == -1);
    CHECK(VertexSet{}.max() == -1);
    CHECK(VertexSet::single(7) == VertexSet::of({7}));
    CHECK(VertexSet::range(2, 5) == VertexSet::of({2, 3, 4}));
    CHECK(VertexSet::range(3, 3).empty());
    CHECK(VertexSet::range(0, 64).size() == 64);
}

TEST_CASE("vertex set bounds are enforced") {
    VertexSet s;
    CHECK_THROWS_AS(s.add(64), std::out_of_range);
    CHECK_THROWS_AS(s.add(-1), std::out_of_range);
    CHECK_THROWS_AS(VertexSet::range(0, 65), std::out_of_range);
    CHECK_THROWS_AS(VertexSet::range(-1, 3), std::out_of_range);
    CHECK_THROWS_AS(VertexSet::range(5, 4), std::out_of_range);
    s.add(3);
    s.add(3);  // idempotent
    CHECK(s.size() == 1);
    s.remove(9);  // absent, silently ignored
    CHECK(s == VertexSet::single(3));
}

TEST_CASE("vertex set algebra") {
    const VertexSet a = VertexSet::of({0, 1, 2});
    const VertexSet b = VertexSet::of({2, 3});
    CHECK((a | b) == VertexSet::of({0, 1, 2, 3}));
    CHECK((a & b) == VertexSet::single(2));
    CHECK((a - b) == VertexSet::of({0, 1}));
    CHECK((a ^ b) == VertexSet::of({0, 1, 3}));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of({3, 4})));
    CHECK(VertexSet::of({1, 2}).subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(VertexSet{}.subset_of(a));
    VertexSet c = a;
    c |= b;
    c -= VertexSet::single(0);
    CHECK(c == VertexSet::of({1, 2, 3}));
}

TEST_CASE("lexicographic order follows sorted tuples") {
    const auto lt = [](std::initializer_list<int> x, std::initializer_list<int> y) {
        return VertexSet::lex_less(VertexSet::of(x), VertexSet::of(y));
    };
    CHECK(lt({0, 1, 2}, {0, 1, 3}));
    CHECK(lt({0, 1, 3}, {0, 2, 3}));
    CHECK(lt({0, 2, 3}, {1, 2, 3}));
    // {0,3} before {1,2}: first elements decide, unlike bitmask order
    CHECK(lt({0, 3}, {1, 2}));
    CHECK(lt({1, 2}, {1, 2, 5}));  // prefix first
    CHECK_FALSE(lt({1, 2}, {1, 2}));
    CHECK_FALSE(lt({1, 2, 5}, {1, 2}));
}

TEST_CASE("iteration is ascending") {
    const VertexSet s = VertexSet::of({5, 0, 2});
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
    CHECK(s.to_string() == "{0,2,5}");
    int last = -1;
    for (const int v : s) {
        CHECK(v > last);
        last = v;
    }
    CHECK(VertexSet{}.to_string() == "{}");
}
