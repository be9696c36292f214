#include <doctest.h>

#include "setsys/core.hpp"

#include <stdexcept>
#include <vector>

using namespace setsys;

TEST_CASE("edge validation") {
    CHECK(Edge({1, 2, 5}).vertices() == std::vector<int>{1, 2, 5});
    CHECK(Edge({3}).size() == 1);
    CHECK(Edge({2, 4}).min_vertex() == 2);
    CHECK(Edge({2, 4}).max_vertex() == 4);
    CHECK(Edge({2, 4}).contains(4));
    CHECK_FALSE(Edge({2, 4}).contains(3));

    CHECK_THROWS_AS(Edge({}), std::invalid_argument);
    CHECK_THROWS_AS(Edge({0}), std::invalid_argument);
    CHECK_THROWS_AS(Edge({-1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Edge({2, 1}), std::invalid_argument);   // not ascending
    CHECK_THROWS_AS(Edge({1, 1}), std::invalid_argument);   // repeated vertex
}

TEST_CASE("edge order is lexicographic on vertex sequences") {
    CHECK(Edge({1}) < Edge({1, 2}));      // prefix first
    CHECK(Edge({1, 2}) < Edge({2}));
    CHECK(Edge({1, 2, 3}) < Edge({1, 3}));
    CHECK(Edge({2}) == Edge({2}));
}

TEST_CASE("set system canonicalizes edge order and keeps duplicates") {
    SetSystem h({Edge({2}), Edge({1, 2}), Edge({1}), Edge({2})});
    REQUIRE(h.size() == 4);
    CHECK(h.edges()[0] == Edge({1}));
    CHECK(h.edges()[1] == Edge({1, 2}));
    CHECK(h.edges()[2] == Edge({2}));
    CHECK(h.edges()[3] == Edge({2}));
    CHECK(h.max_vertex() == 2);
    CHECK(weight(h) == 5);

    SetSystem empty;
    CHECK(empty.empty());
    CHECK(empty.max_vertex() == 0);
    CHECK(weight(empty) == 0);
    CHECK(is_simple(empty));
}

TEST_CASE("system order compares sorted edge sequences") {
    SetSystem a({Edge({1}), Edge({1})});
    SetSystem b({Edge({1}), Edge({1, 2})});
    SetSystem c({Edge({1, 2})});
    CHECK(a < b);
    // [[1],[1]] vs [[1,2]]: first edges already differ and [1] < [1,2].
    CHECK(a < c);
    CHECK(b < c);
    CHECK(a == SetSystem({Edge({1}), Edge({1})}));
}

TEST_CASE("degree profile and simplicity") {
    SetSystem h({Edge({1, 2}), Edge({2}), Edge({2})});
    auto deg = degree_profile(h);
    CHECK(deg[1] == 1);
    CHECK(deg[2] == 3);
    CHECK(weight(h) == 4);
    CHECK_FALSE(is_simple(h));
    CHECK(is_simple(SetSystem({Edge({1, 2}), Edge({2})})));
}

TEST_CASE("normalize relabels order-isomorphically") {
    // labels 3 < 7 < 9 become 1 < 2 < 3
    SetSystem h = normalize({{7, 3}, {9}, {9}});
    CHECK(h == SetSystem({Edge({1, 2}), Edge({3}), Edge({3})}));
    CHECK(is_normalized(h));

    // negative and gappy labels are fine before normalization
    CHECK(normalize({{-5, 100}, {0}}) ==
          SetSystem({Edge({1, 3}), Edge({2})}));

    // already-normalized input is a fixed point
    RawEdges raw{{1, 2}, {2}};
    CHECK(normalize(raw) == normalize({{1, 2}, {2}}));

    CHECK_THROWS_AS(normalize({{1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({{4, 4}}), std::invalid_argument);
}

TEST_CASE("is_normalized detects vertex gaps") {
    CHECK(is_normalized(SetSystem({Edge({1}), Edge({2})})));
    CHECK_FALSE(is_normalized(SetSystem({Edge({2})})));
    CHECK_FALSE(is_normalized(SetSystem({Edge({1, 3})})));
    CHECK(is_normalized(SetSystem{}));
}

TEST_CASE("json round trip") {
    SetSystem h({Edge({1, 2}), Edge({3}), Edge({3})});
    CHECK(h.to_json() == R"({"edges":[[1,2],[3],[3]]})");
    CHECK(SetSystem::from_json(h.to_json()) == h);
    CHECK(SetSystem::from_json(R"({"edges":[]})") == SetSystem{});
    // edge order between edges is canonicalized, but each edge must arrive
    // ascending (an edge's vertex sequence is its identity)
    CHECK(SetSystem::from_json(R"({"edges":[[3],[1,2]]})") ==
          SetSystem({Edge({1, 2}), Edge({3})}));
    CHECK_THROWS_AS(SetSystem::from_json(R"({"edges":[[2,1]]})"), std::invalid_argument);

    CHECK_THROWS_AS(SetSystem::from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem::from_json(R"({"nope":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem::from_json(R"({"edges":[[]]})"), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem::from_json(R"({"edges":[[1.5]]})"), std::invalid_argument);
}

TEST_CASE("set partition validation and canonical block order") {
    SetPartition p(4, {{2, 4}, {3, 1}});
    REQUIRE(p.block_count() == 2);
    CHECK(p.blocks()[0] == std::vector<int>{1, 3});  // sorted, ordered by minima
    CHECK(p.blocks()[1] == std::vector<int>{2, 4});
    CHECK(p.block_of(4) == 1);
    CHECK(p.block_of(1) == 0);
    CHECK(p.is_sparse(2));
    CHECK_FALSE(p.is_sparse(3));
    CHECK(SetPartition(3, {{1}, {2}, {3}}).is_sparse(3));

    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);          // 3 missing
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(SetPartition(3, {{1, 2, 3, 4}}), std::invalid_argument);    // out of range
    CHECK_THROWS_AS(SetPartition(3, {{1, 2, 3}, {}}), std::invalid_argument);   // empty block
    CHECK_THROWS_AS(SetPartition(0, {}), std::invalid_argument);
}

TEST_CASE("interval partition geometry") {
    IntervalPartition q({2, 1, 3});
    CHECK(q.ground_size() == 6);
    CHECK(q.count() == 3);
    CHECK(q.interval_of(1) == 0);
    CHECK(q.interval_of(2) == 0);
    CHECK(q.interval_of(3) == 1);
    CHECK(q.interval_of(6) == 2);
    CHECK(q.interval(0) == std::pair<int, int>{1, 2});
    CHECK(q.interval(2) == std::pair<int, int>{4, 6});

    CHECK_THROWS_AS(IntervalPartition({}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalPartition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(q.interval_of(7), std::invalid_argument);
    CHECK_THROWS_AS(q.interval(3), std::invalid_argument);
}

TEST_CASE("orthogonality means no block repeats an interval") {
    IntervalPartition q({2, 2});  // intervals {1,2}, {3,4}
    CHECK(orthogonal(q, SetPartition(4, {{1, 3}, {2, 4}})));
    CHECK(orthogonal(q, SetPartition(4, {{1}, {2}, {3}, {4}})));
    CHECK_FALSE(orthogonal(q, SetPartition(4, {{1, 2}, {3}, {4}})));
    CHECK_FALSE(orthogonal(q, SetPartition(4, {{1}, {2}, {3, 4}})));

    CHECK_NOTHROW(OrthogonalPair(q, SetPartition(4, {{1, 3}, {2, 4}})));
    CHECK_THROWS_AS(OrthogonalPair(q, SetPartition(4, {{1, 2}, {3}, {4}})),
                    std::invalid_argument);
    // ground sizes must agree
    CHECK_THROWS_AS(OrthogonalPair(IntervalPartition({3}), SetPartition(4, {{1, 2, 3, 4}})),
                    std::invalid_argument);
}
