#include <doctest.h>

#include <map>
#include <set>

#include "qpc/error.hpp"
#include "qpc/partition.hpp"
#include "test_util.hpp"

using namespace qpc;
using qpc_test::bell_numbers;
using qpc_test::catalan_numbers;
using qpc_test::noncrossing_stack;

TEST_CASE("parse and print round-trip") {
    SetPartition p = SetPartition::parse("{1,3}{2,4}{5,6}");
    CHECK(p.str() == "{1,3}{2,4}{5,6}");
    CHECK(p.rgs_string() == "rgs:010122");
    CHECK(SetPartition::parse(p.rgs_string()) == p);
    CHECK(SetPartition::parse("rgs:0101") == SetPartition::basic_crossing());
    CHECK_THROWS_AS(SetPartition::parse("{1,3}"), argument_error);  // 2 uncovered
    CHECK_THROWS_AS(SetPartition::parse("{1,5}"), argument_error);
    CHECK_THROWS_AS(SetPartition::parse("rgs:101"), argument_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        SetPartition q = qpc_test::random_partition(1 + trial % 10, rng);
        CHECK(SetPartition::parse(q.str()) == q);
        CHECK(SetPartition::parse(q.rgs_string()) == q);
    }
}

TEST_CASE("enumeration counts match the Bell/Catalan recursions") {
    auto bell = bell_numbers(10);
    auto catalan = catalan_numbers(10);
    for (int k = 1; k <= 10; ++k) {
        auto all = enumerate_partitions(k, PartitionFilter::All);
        CHECK(static_cast<long long>(all.size()) == bell[k]);
        // deterministic lexicographic order, duplicate-free
        for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
        if (k <= 8) {
            auto nc = enumerate_partitions(k, PartitionFilter::Noncrossing);
            auto cr = enumerate_partitions(k, PartitionFilter::Crossing);
            CHECK(static_cast<long long>(nc.size()) == catalan[k]);
            CHECK(static_cast<long long>(cr.size()) == bell[k] - catalan[k]);
        }
    }
    CHECK(enumerate_partitions(1, PartitionFilter::All) ==
          std::vector<SetPartition>{SetPartition::one_block(1)});
    CHECK(enumerate_partitions(5, PartitionFilter::Crossing).size() == 10);
    CHECK(enumerate_partitions(6, PartitionFilter::Crossing).size() == 71);
    CHECK_THROWS_AS(enumerate_partitions(0), size_error);
    CHECK_THROWS_AS(enumerate_partitions(13), size_error);
}

TEST_CASE("crossing scan") {
    // two crossings 5<6<7<9 and 5<6<7<10
    SetPartition p = SetPartition::parse("{1}{2,3}{4}{5,7}{6,9,10}{8}");
    auto cs = crossings(p);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].pts == std::array<int, 4>{5, 6, 7, 9});
    CHECK(cs[1].pts == std::array<int, 4>{5, 6, 7, 10});

    CHECK(crossings(SetPartition::parse("{1,2}{3,4}")).empty());
    auto basic = crossings(SetPartition::basic_crossing());
    REQUIRE(basic.size() == 1);
    CHECK(basic[0].pts == std::array<int, 4>{1, 2, 3, 4});
}

TEST_CASE("noncrossing agrees with the stack oracle") {
    for (int k = 1; k <= 8; ++k)
        for (const auto& p : enumerate_partitions(k))
            CHECK(crossings(p).empty() == noncrossing_stack(p));
}

TEST_CASE("crossing decomposition") {
    // noncrossing partitions decompose trivially
    SetPartition nc = SetPartition::parse("{1,2}{3}{4,5}");
    auto d = crossing_decomposition(nc);
    CHECK(d.crossers.empty());
    CHECK(d.crossing_part.points() == 0);
    CHECK(d.noncrossing_part == nc);

    SetPartition p = SetPartition::parse("{1,3}{2,4}{5,6}");
    auto e = crossing_decomposition(p);
    CHECK(e.crossers == std::vector<int>{1, 2, 3, 4});
    CHECK(e.crossing_part == SetPartition::basic_crossing());
    CHECK(e.noncrossing_part == SetPartition::one_block(2));
}

TEST_CASE("equal crossing sets give equal crossing parts (exhaustive k <= 7)") {
    for (int k = 4; k <= 7; ++k) {
        std::map<std::vector<Crossing>, SetPartition> by_crossings;
        for (const auto& p : enumerate_partitions(k)) {
            auto cs = crossings(p);
            if (cs.empty()) continue;
            auto part = crossing_decomposition(p).crossing_part;
            auto [it, inserted] = by_crossings.emplace(cs, part);
            if (!inserted) CHECK(it->second == part);
        }
    }
}

TEST_CASE("every point of a crossing block lies in some crossing (k <= 7)") {
    for (int k = 4; k <= 7; ++k)
        for (const auto& p : enumerate_partitions(k, PartitionFilter::Crossing)) {
            std::set<int> crossers;
            std::set<int> crossing_blocks;
            for (const auto& c : crossings(p))
                for (int x : c.pts) {
                    crossers.insert(x);
                    crossing_blocks.insert(p.block_index(x));
                }
            for (int x = 1; x <= k; ++x)
                if (crossing_blocks.count(p.block_index(x))) CHECK(crossers.count(x) == 1);
        }
}

TEST_CASE("crossing-set inclusion refines the restriction (k <= 6 exhaustive, k = 7 sampled)") {
    auto check_pair = [](const SetPartition& p, const SetPartition& q) {
        auto cp = crossings(p);
        auto cq = crossings(q);
        if (cp.empty() || cq.empty()) return;
        if (!std::includes(cq.begin(), cq.end(), cp.begin(), cp.end())) return;
        auto dec = crossing_decomposition(p);
        CHECK(refines(dec.crossing_part, restrict(q, dec.crossers).q));
    };
    for (int k = 4; k <= 6; ++k) {
        auto cr = enumerate_partitions(k, PartitionFilter::Crossing);
        for (const auto& p : cr)
            for (const auto& q : cr) check_pair(p, q);
    }
    std::mt19937_64 rng(42);
    auto cr7 = enumerate_partitions(7, PartitionFilter::Crossing);
    std::uniform_int_distribution<size_t> pick(0, cr7.size() - 1);
    for (int trial = 0; trial < 5000; ++trial) check_pair(cr7[pick(rng)], cr7[pick(rng)]);
}

TEST_CASE("restriction with deleted-block count") {
    auto r1 = restrict(SetPartition::parse("{1,2,3}{4,5}{6}{7,8}"), std::vector<int>{1, 2, 3, 7, 8});
    CHECK(r1.q == SetPartition::parse("{1,2,3}{4,5}"));
    CHECK(r1.deleted == 2);

    auto r2 = restrict(SetPartition::parse("{1,2,3,7,8}{4,6}{5,9}"), std::vector<int>{4, 5, 6, 9});
    CHECK(r2.q == SetPartition::basic_crossing());
    CHECK(r2.deleted == 1);

    SetPartition p = SetPartition::parse("{1,4}{2,3}{5}");
    std::vector<int> full{1, 2, 3, 4, 5};
    auto r3 = restrict(p, full);
    CHECK(r3.q == p);
    CHECK(r3.deleted == 0);
    CHECK_THROWS_AS(restrict(p, std::vector<int>{}), argument_error);
}

TEST_CASE("rotation and reflection") {
    // r^2({4,5}{1,3}{2,7}{6}) = {6,7}{3,5}{2,4}{1}
    SetPartition p = SetPartition::parse("{1,3}{2,7}{4,5}{6}");
    CHECK(rotate(p, 2) == SetPartition::parse("{1}{2,4}{3,5}{6,7}"));

    for (int k = 1; k <= 6; ++k)
        for (const auto& q : enumerate_partitions(k)) {
            CHECK(rotate(q, 0) == q);
            CHECK(rotate(q, k) == q);
            for (int a = 1; a < k; ++a) {
                for (int b = 1; b < k; ++b)
                    CHECK(rotate(rotate(q, a), b) == rotate(q, a + b));
                // s r^a = r^{-a} s
                CHECK(reflect(rotate(q, a)) == rotate(reflect(q), -a));
            }
        }
    for (const auto& q : enumerate_partitions(8))
        CHECK(reflect(reflect(q)) == q);
}

TEST_CASE("refinement order and join") {
    SetPartition a = SetPartition::parse("{1,2}{3}{4}");
    SetPartition b = SetPartition::parse("{1}{2,3}{4}");
    CHECK(join(a, b) == SetPartition::parse("{1,2,3}{4}"));
    for (const auto& p : enumerate_partitions(5)) {
        CHECK(refines(p, p));
        CHECK(join(p, p) == p);
        CHECK(join(p, SetPartition::one_block(5)) == SetPartition::one_block(5));
        CHECK(refines(p, SetPartition::one_block(5)));
        CHECK(refines(SetPartition::singletons(5), p));
    }
    // join is the least upper bound: p,q refine join, and any common upper
    // bound is refined by it
    auto all4 = enumerate_partitions(4);
    for (const auto& p : all4)
        for (const auto& q : all4) {
            SetPartition j = join(p, q);
            CHECK(refines(p, j));
            CHECK(refines(q, j));
            for (const auto& u : all4)
                if (refines(p, u) && refines(q, u)) CHECK(refines(j, u));
        }
}

TEST_CASE("kernel of a tuple") {
    CHECK(SetPartition::kernel_of_tuple(std::vector<int>{1, 1, 1}) == SetPartition::one_block(3));
    CHECK(SetPartition::kernel_of_tuple(std::vector<int>{1, 2, 1, 2, 3}) ==
          SetPartition::parse("{1,3}{2,4}{5}"));
    CHECK(SetPartition::kernel_of_tuple(std::vector<int>{4, 7, 1, 9}) ==
          SetPartition::singletons(4));
}
