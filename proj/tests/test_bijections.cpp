#include <doctest.h>

#include "setsys/bijections.hpp"
#include "setsys/count.hpp"
#include "setsys/enumerate.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace setsys;

TEST_CASE("pair to system: blocks become edges of interval indices") {
    // Q = (2,1): intervals {1,2},{3}; P = {{1,3},{2}} meets intervals {0,1},{0}
    OrthogonalPair qp(IntervalPartition({2, 1}), SetPartition(3, {{1, 3}, {2}}));
    CHECK(pair_to_system(qp) == normalize({{1, 2}, {1}}));

    // all singleton blocks over one interval: n copies of {1}
    OrthogonalPair rep(IntervalPartition({3}), SetPartition(3, {{1}, {2}, {3}}));
    CHECK(pair_to_system(rep) == normalize({{1}, {1}, {1}}));
}

TEST_CASE("canonical section: fixed pairs") {
    {
        OrthogonalPair qp = system_to_pair(normalize({{1}, {1}}));
        CHECK(qp.q().lengths() == std::vector<int>{2});
        CHECK(qp.p() == SetPartition(2, {{1}, {2}}));
    }
    {
        OrthogonalPair qp = system_to_pair(normalize({{1, 2}, {1, 2}}));
        CHECK(qp.q().lengths() == std::vector<int>{2, 2});
        CHECK(qp.p() == SetPartition(4, {{1, 3}, {2, 4}}));
    }
    CHECK_THROWS_AS(system_to_pair(SetSystem{}), std::invalid_argument);
    CHECK_THROWS_AS(system_to_pair(SetSystem({Edge({2})})), std::invalid_argument);
}

TEST_CASE("section and trace are mutually consistent on every system") {
    for (int n = 1; n <= 5; ++n) {
        gen_set_systems({n, false, std::nullopt}, [&](const SetSystem& h) {
            OrthogonalPair qp = system_to_pair(h);
            CHECK(qp.ground_size() == n);
            CHECK(pair_to_system(qp) == h);
        });
    }
}

TEST_CASE("trace is onto: every pair collapses to a system of its weight") {
    for (int n = 1; n <= 5; ++n) {
        gen_orthogonal_pairs(n, [&](const OrthogonalPair& qp) {
            SetSystem h = pair_to_system(qp);
            CHECK(weight(h) == n);
            CHECK(is_normalized(h));
        });
    }
}

TEST_CASE("equivalence classes: fixed sizes and the factorial law") {
    {
        // non-simple trace: strict inequality
        OrthogonalPair qp = system_to_pair(normalize({{1}, {1}}));
        EquivClass c = class_of(qp);
        CHECK(c.size == 1);
        CHECK(class_size_bound(qp) == 2);
        CHECK(c.set_system == normalize({{1}, {1}}));
        CHECK(pair_to_system(c.representative) == c.set_system);
    }
    {
        OrthogonalPair qp = system_to_pair(normalize({{1, 2}, {1, 2}}));
        EquivClass c = class_of(qp);
        CHECK(c.size == 2);
        CHECK(class_size_bound(qp) == 4);
    }
    {
        // simple trace: equality with prod |I_i|!
        OrthogonalPair qp = system_to_pair(normalize({{1, 2}, {2}}));
        EquivClass c = class_of(qp);
        CHECK(c.size == 2);  // 1! * 2!
        CHECK(class_size_bound(qp) == 2);
    }
}

TEST_CASE("classes partition the pair space") {
    for (int n = 1; n <= 5; ++n) {
        // group all pairs by trace
        std::map<SetSystem, BigInt> by_trace;
        gen_orthogonal_pairs(n, [&](const OrthogonalPair& qp) { ++by_trace[pair_to_system(qp)]; });

        BigInt total_pairs = 0;
        for (auto& [h, cnt] : by_trace) total_pairs += cnt;

        BigInt sum_classes = 0;
        gen_set_systems({n, false, std::nullopt}, [&](const SetSystem& h) {
            OrthogonalPair qp = system_to_pair(h);
            EquivClass c = class_of(qp);
            CHECK(c.size == by_trace.at(h));  // class == fiber of the trace
            CHECK(c.size <= class_size_bound(qp));
            if (is_simple(h)) CHECK(c.size == class_size_bound(qp));
            else CHECK(c.size < class_size_bound(qp));
            sum_classes += c.size;
        });
        CHECK(sum_classes == total_pairs);
    }
    CHECK_THROWS_AS(class_of(system_to_pair(normalize({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}))),
                    std::invalid_argument);  // ground size cap
}

TEST_CASE("injection: fixed traces") {
    CHECK(inject_nonsimple(normalize({{1}, {1}})) == normalize({{1, 2}}));
    CHECK(inject_nonsimple(normalize({{1}, {1}, {1}})) == normalize({{1, 2, 3}}));
    CHECK(inject_nonsimple(normalize({{1}, {1}, {2}})) == normalize({{1, 2}, {3}}));
    CHECK(inject_nonsimple(normalize({{1}, {2}, {2}})) == normalize({{2, 3}, {1}}));
    CHECK(inject_nonsimple(normalize({{1}, {1}, {2}, {2}})) == normalize({{1, 2}, {1, 3}}));
    CHECK(inject_nonsimple(normalize({{1, 2}, {1, 2}})) == normalize({{1, 3, 4}, {2}}));
    CHECK(inject_nonsimple(normalize({{1, 2}, {1, 2}, {1, 2}})) ==
          normalize({{1}, {2, 3, 5, 6}, {4}}));
    CHECK(inject_nonsimple(normalize({{1, 2}, {1, 2}, {3}})) ==
          normalize({{1, 3, 4}, {2}, {5}}));
    CHECK(inject_nonsimple(normalize({{1}, {1, 2}, {1, 2}})) ==
          normalize({{1, 3, 4}, {2}, {3}}));

    CHECK_THROWS_AS(inject_nonsimple(normalize({{1, 2}, {2}})), std::invalid_argument);  // simple
    CHECK_THROWS_AS(inject_nonsimple(SetSystem({Edge({2}), Edge({2})})),
                    std::invalid_argument);  // not normalized
}

TEST_CASE("recovery inverts the injection and rejects off-image systems") {
    CHECK(recover_nonsimple(normalize({{1, 2}})) == normalize({{1}, {1}}));
    CHECK(recover_nonsimple(normalize({{1, 2, 3}})) == normalize({{1}, {1}, {1}}));
    CHECK(recover_nonsimple(normalize({{1, 3, 4}, {2}})) == normalize({{1, 2}, {1, 2}}));
    CHECK(recover_nonsimple(normalize({{1, 2}, {3, 4}})) == normalize({{1}, {1}, {2, 3}}));

    // simple systems that no non-simple system maps to
    CHECK_THROWS_AS(recover_nonsimple(normalize({{1}, {2}})), NotInImageError);
    CHECK_THROWS_AS(recover_nonsimple(normalize({{1, 3}, {2}})), NotInImageError);
    CHECK_THROWS_AS(recover_nonsimple(normalize({{1}})), NotInImageError);

    CHECK_THROWS_AS(recover_nonsimple(normalize({{1}, {1}})), std::invalid_argument);  // not simple
}

TEST_CASE("injection properties hold exhaustively at small weight") {
    for (int n = 2; n <= 6; ++n) {
        std::set<SetSystem> images;
        std::set<SetSystem> simple_pool;
        gen_set_systems({n, true, std::nullopt},
                        [&](const SetSystem& h) { simple_pool.insert(h); });
        gen_set_systems({n, false, std::nullopt}, [&](const SetSystem& h) {
            if (is_simple(h)) return;
            SetSystem s = inject_nonsimple(h);
            CHECK(weight(s) == n);
            CHECK(is_simple(s));
            CHECK(is_normalized(s));
            CHECK(simple_pool.count(s) == 1);
            CHECK(images.insert(s).second);  // injective
            CHECK(recover_nonsimple(s) == h);
        });
        // recovery succeeds exactly on the image
        for (const SetSystem& s : simple_pool) {
            if (images.count(s)) continue;
            CHECK_THROWS_AS(recover_nonsimple(s), NotInImageError);
        }
        // and therefore: all <= 2 * simple
        CHECK(count_exact(n, false) <= 2 * count_exact(n, true));
    }
}

TEST_CASE("partition graphs: paths only, exact edges, round trip") {
    SetPartition p(4, {{1, 3}, {2, 4}});
    PartitionGraph g = partition_to_graph(p);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK(graph_to_partition(g) == p);

    // isolated vertices come back as singletons
    PartitionGraph iso(3, {});
    CHECK(graph_to_partition(iso) == SetPartition(3, {{1}, {2}, {3}}));

    CHECK_THROWS_AS(PartitionGraph(3, {{1, 2}, {2, 3}, {1, 3}}), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(PartitionGraph(4, {{1, 2}, {1, 3}, {1, 4}}), std::invalid_argument);  // degree 3
    CHECK_THROWS_AS(PartitionGraph(2, {{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionGraph(2, {{1, 1}}), std::invalid_argument);

    for (int n = 1; n <= 7; ++n)
        gen_partitions(n, [&](const SetPartition& q) {
            CHECK(graph_to_partition(partition_to_graph(q)) == q);
        });
}

TEST_CASE("edge shift: fixed example and exhaustive inverses") {
    // {{1,3},{2,4}} over [4]  <->  {{1,2,3}} over [3]
    SetPartition two_sparse(4, {{1, 3}, {2, 4}});
    CHECK(sparse_reduce(two_sparse) == SetPartition(3, {{1, 2, 3}}));
    CHECK(sparse_expand(SetPartition(3, {{1, 2, 3}})) == two_sparse);

    CHECK_THROWS_AS(sparse_reduce(SetPartition(2, {{1, 2}})), std::invalid_argument);  // not 2-sparse
    CHECK_THROWS_AS(sparse_reduce(SetPartition(1, {{1}})), std::invalid_argument);     // n-1 < 1

    for (int n = 1; n <= 7; ++n) {
        // expand then reduce is the identity on all partitions of [n]
        gen_partitions(n, [&](const SetPartition& p) {
            SetPartition e = sparse_expand(p);
            CHECK(e.ground_size() == n + 1);
            CHECK(e.is_sparse(2));
            CHECK(sparse_reduce(e) == p);
        });
        // reduce then expand is the identity on all 2-sparse partitions of [n+1]
        std::set<SetPartition> reduced;
        gen_sparse_partitions(n + 1, 2, [&](const SetPartition& p) {
            SetPartition r = sparse_reduce(p);
            CHECK(r.ground_size() == n);
            CHECK(sparse_expand(r) == p);
            CHECK(reduced.insert(r).second);  // bijective, not just injective
        });
        CHECK(BigInt(reduced.size()) == bell(n));
    }

    // m-sparse goes to (m-1)-sparse: iterate down to plain partitions
    int count = 0;
    gen_sparse_partitions(6, 3, [&](const SetPartition& p) {
        SetPartition r = sparse_reduce(p);
        CHECK(r.is_sparse(2));
        CHECK(sparse_reduce(r).ground_size() == 4);
        ++count;
    });
    CHECK(BigInt(count) == bell(4));
}
