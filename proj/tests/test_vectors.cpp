#include <doctest.h>

#include <random>

#include "qpc/dense.hpp"
#include "qpc/error.hpp"
#include "qpc/json_io.hpp"
#include "qpc/partition_vector.hpp"
#include "test_util.hpp"

using namespace qpc;

namespace {

RatFuncN nc(long v) { return RatFuncN(v); }

long ipow(int b, int e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("dense expansion entries and weights") {
    // one block on two points at N0=3: ones exactly on the diagonal
    DenseVector d = expand_dense(SetPartition::one_block(2), 3);
    REQUIRE(d.entries.size() == 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(d.entries[static_cast<size_t>(i) * 3 + j] == BigRational(i == j ? 1 : 0));

    // discrete partition: all ones
    DenseVector disc = expand_dense(SetPartition::singletons(3), 2);
    for (const auto& e : disc.entries) CHECK(e == BigRational(1));

    // weight = N0^{|p|}, the number of block colorings
    for (int k = 1; k <= 5; ++k)
        for (int n0 = 1; n0 <= 4; ++n0)
            for (const auto& p : enumerate_partitions(k)) {
                DenseVector v = expand_dense(p, n0);
                BigRational w(0);
                for (const auto& e : v.entries) w += e;
                CHECK(w == BigRational(ipow(n0, p.block_count())));
            }

    CHECK_THROWS_AS(expand_dense(SetPartition::singletons(12), 12), budget_error);
}

TEST_CASE("morphism application: identity and the semicircle display") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        PartitionVector v;
        for (int t = 0; t < 3; ++t)
            v += PartitionVector::basis(qpc_test::random_partition(5, rng),
                                        RatFuncN(qpc_test::random_rational(rng)));
        if (v.is_zero()) continue;
        CHECK(apply_morphism(TwoLinePartition::identity(5), v) == v);
    }

    // S_{4,7}(a1 xi_{{1,3}{2,4}{5,6}{7,8}} + a2 xi_{{1,3}{2,4}{5}{6}{7}{8}})
    //   = N a1 xi_x + N^2 a2 xi_{{1,3}{2}{4}}
    RatFuncN a1(make_rational(2, 3)), a2(make_rational(-5, 7));
    PartitionVector v = PartitionVector::basis(SetPartition::parse("{1,3}{2,4}{5,6}{7,8}"), a1);
    v += PartitionVector::basis(SetPartition::parse("{1,3}{2,4}{5}{6}{7}{8}"), a2);
    PartitionVector out = apply_morphism(semicircle_capping(8, 4, 7), v);
    PolyN n = PolyN::variable();
    CHECK(out.coeff(SetPartition::basic_crossing()) == a1 * RatFuncN(n));
    CHECK(out.coeff(SetPartition::parse("{1,3}{2}{4}")) == a2 * RatFuncN(n * n));
    CHECK(out.term_count() == 2);
}

TEST_CASE("apply_morphism commutes with dense expansion") {
    std::mt19937_64 rng(11);
    for (int n0 = 2; n0 <= 3; ++n0)
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> dk(1, 4), dl(1, 4), dt(1, 3);
            int k = dk(rng), l = dl(rng);
            TwoLinePartition t =
                TwoLinePartition::from_body(k, l, qpc_test::random_partition(k + l, rng));
            PartitionVector v;
            for (int i = 0, nt = dt(rng); i < nt; ++i)
                v += PartitionVector::basis(qpc_test::random_partition(k, rng),
                                            RatFuncN(qpc_test::random_rational(rng)));
            if (v.is_zero()) continue;
            DenseVector lhs = dense_apply_morphism(t, expand_dense(v, n0));
            DenseVector rhs = expand_dense(apply_morphism(t, v), n0);
            CHECK(lhs.entries == rhs.entries);
        }
}

TEST_CASE("red_cr drops exactly the noncrossing terms") {
    PartitionVector v;
    for (const auto& p : enumerate_partitions(4)) v += PartitionVector::basis(p, nc(1));
    PartitionVector r = red_cr(v);
    CHECK(r.term_count() == 1);
    CHECK(r.coeff(SetPartition::basic_crossing()) == nc(1));
    CHECK(red_cr(r) == r);

    PartitionVector w = PartitionVector::basis(SetPartition::parse("{1,2}{3,4}"), nc(5));
    CHECK(red_cr(w).is_zero());

    // red_CR(R_{[1,4]}(xi)) = a1 N xi_x for the three-term illustration
    RatFuncN a1(2), a2(3), a3(make_rational(1, 4));
    PartitionVector xi = PartitionVector::basis(SetPartition::parse("{1,3}{2,4}{5,6}"), a1);
    xi += PartitionVector::basis(SetPartition::parse("{1,2}{3,5}{4,6}"), a2);
    xi += PartitionVector::basis(SetPartition::parse("{1}{2,4,6}{3,5}"), a3);
    PartitionVector restricted =
        apply_morphism(restriction_diagram(6, std::vector<int>{1, 2, 3, 4}), xi);
    PartitionVector reduced = red_cr(restricted);
    CHECK(reduced.term_count() == 1);
    CHECK(reduced.coeff(SetPartition::basic_crossing()) == a1 * RatFuncN(PolyN::variable()));

    // the guarded projection refuses the non-injective regime
    CHECK_THROWS_AS(projection_cr(xi, 5), argument_error);
    CHECK(projection_cr(xi, 6) == red_cr(xi));
}

TEST_CASE("gw basis sizes and dense ranks") {
    auto bell = qpc_test::bell_numbers(6);
    // k <= N0: everything is a basis
    for (int k = 1; k <= 4; ++k) {
        auto basis = gw_basis(k, k);
        CHECK(static_cast<long long>(basis.size()) == bell[k]);
        CHECK(dense_rank(basis, k) == static_cast<int>(basis.size()));
    }
    // N0=3, k=4: everything except the discrete partition
    auto b34 = gw_basis(4, 3);
    CHECK(b34.size() == 14);
    CHECK(dense_rank(b34, 3) == 14);
    CHECK(dense_rank(enumerate_partitions(4), 3) == 14);
    // N0=3, k=5: rank 41 of all 52
    CHECK(dense_rank(enumerate_partitions(5), 3) == 41);
}

TEST_CASE("dense_rank matches the literal expansion oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> dk(1, 5), dn(2, 3), dm(1, 8);
        int k = dk(rng), n0 = dn(rng), m = dm(rng);
        std::vector<SetPartition> ps;
        for (int i = 0; i < m; ++i) ps.push_back(qpc_test::random_partition(k, rng));
        CHECK(dense_rank(ps, n0) == qpc_test::literal_dense_rank(ps, n0));
    }
}

TEST_CASE("vectors with a common crossing set are independent (k <= 6)") {
    for (int k = 4; k <= 6; ++k) {
        std::map<std::vector<Crossing>, std::vector<SetPartition>> groups;
        for (const auto& p : enumerate_partitions(k)) {
            auto cs = crossings(p);
            if (!cs.empty()) groups[cs].push_back(p);
        }
        for (const auto& [cs, ps] : groups)
            CHECK(dense_rank(ps, k) == static_cast<int>(ps.size()));
    }
}

TEST_CASE("the basic crossing lies in the noncrossing span at N=3") {
    std::map<SetPartition, BigRational> combo{{SetPartition::basic_crossing(), BigRational(1)}};
    CHECK(dense_in_span(combo, enumerate_partitions(4, PartitionFilter::Noncrossing), 3));
    CHECK_FALSE(dense_in_span(combo, enumerate_partitions(4, PartitionFilter::Noncrossing), 4));
}

TEST_CASE("intersection dimensions via Grassmann") {
    // At N0=3 the whole of hom(0,5) is 41-dimensional (GW bound), one short of
    // Catalan(5), so the noncrossing span drops to 41 and the intersection is
    // 41 + 10 - 41 = 10. From N0 >= 4 the noncrossing vectors are independent
    // and the intersection dimension is C(k,2)+1.
    CHECK(intersection_dim_nc_cr(5, 3) == 10);
    CHECK(dense_rank(enumerate_partitions(5, PartitionFilter::Noncrossing), 3) == 41);
    CHECK(dense_rank(enumerate_partitions(5, PartitionFilter::Noncrossing), 4) == 42);
    CHECK_THROWS_AS(intersection_dim_nc_cr(5, 4), argument_error);
}

TEST_CASE("mobius expansion of the discrete partition") {
    auto c5 = mobius_expand_discrete(5);
    CHECK(c5.at(SetPartition::one_block(5)) == BigRational(-24));
    // any pair-plus-singletons partition: |p| = 4 blocks, c = +1
    CHECK(c5.at(SetPartition::parse("{1,3}{2}{4}{5}")) == BigRational(1));
    for (int k = 2; k <= 6; ++k) CHECK(mobius_verify(k));

    // independent check at k = 4: literal dense solve at N0 = 3
    {
        auto all = enumerate_partitions(4);
        std::vector<SetPartition> others;
        for (const auto& p : all)
            if (!(p == SetPartition::singletons(4))) others.push_back(p);
        std::vector<std::vector<BigRational>> a;  // rows: tuples, cols: others
        DenseVector disc = expand_dense(SetPartition::singletons(4), 3);
        std::vector<std::vector<BigRational>> cols;
        for (const auto& p : others) cols.push_back(expand_dense(p, 3).entries);
        // solve by elimination on the 81 x 14 system
        const size_t rows = disc.entries.size();
        std::vector<std::vector<BigRational>> aug(rows);
        for (size_t r = 0; r < rows; ++r) {
            aug[r].resize(others.size() + 1);
            for (size_t c = 0; c < others.size(); ++c) aug[r][c] = cols[c][r];
            aug[r][others.size()] = disc.entries[r];
        }
        // forward elimination
        size_t next = 0;
        std::vector<int> pivot_cols;
        for (size_t col = 0; col < others.size() && next < rows; ++col) {
            size_t piv = rows;
            for (size_t i = next; i < rows; ++i)
                if (sgn(aug[i][col]) != 0) { piv = i; break; }
            if (piv == rows) continue;
            std::swap(aug[next], aug[piv]);
            for (size_t i = 0; i < rows; ++i) {
                if (i == next || sgn(aug[i][col]) == 0) continue;
                BigRational f = aug[i][col] / aug[next][col];
                for (size_t j = col; j <= others.size(); ++j) aug[i][j] -= f * aug[next][j];
            }
            pivot_cols.push_back(static_cast<int>(col));
            ++next;
        }
        for (size_t i = next; i < rows; ++i) CHECK(sgn(aug[i][others.size()]) == 0);
        auto c4 = mobius_expand_discrete(4);
        for (size_t r = 0; r < pivot_cols.size(); ++r) {
            BigRational x = aug[r][others.size()] / aug[r][pivot_cols[r]];
            CHECK(x == c4.at(others[pivot_cols[r]]));
        }
        CHECK(pivot_cols.size() == others.size());  // unique solution
    }

    // eta lies in the noncrossing span at N0 = 4
    std::map<SetPartition, BigRational> eta;
    for (const auto& p : enumerate_partitions(5, PartitionFilter::Crossing))
        eta[p] = p.block_count() == 3 ? BigRational(1) : BigRational(-2);
    CHECK(dense_in_span(eta, enumerate_partitions(5, PartitionFilter::Noncrossing), 4));
}

TEST_CASE("partition vector JSON round-trip") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        PartitionVector v;
        std::uniform_int_distribution<int> dk(1, 6), dt(0, 4);
        int k = dk(rng);
        for (int t = 0, nt = dt(rng); t < nt; ++t) {
            PolyN num({qpc_test::random_rational(rng), qpc_test::random_rational(rng)});
            PolyN den = PolyN::variable() + PolyN(2);
            v += PartitionVector::basis(qpc_test::random_partition(k, rng), RatFuncN(num, den));
        }
        if (v.is_zero()) continue;
        CHECK(partition_vector_from_json(to_json(v)) == v);
    }
}
