#include <doctest.h>

#include <random>

#include "qpc/error.hpp"
#include "qpc/matrix.hpp"
#include "test_util.hpp"

using namespace qpc;

namespace {

RatFuncN mono(int deg) { return RatFuncN(PolyN::monomial(deg)); }

MatrixQN random_poly_matrix(int rows, int cols, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    MatrixQN m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<BigRational> cs;
            for (int d = 0; d <= max_deg; ++d) cs.emplace_back(coeff(rng));
            m.at(i, j) = RatFuncN(PolyN(std::move(cs)));
        }
    return m;
}

}  // namespace

TEST_CASE("generic rank of simple matrices") {
    MatrixQN id = MatrixQN::identity(4);
    RankReport r = rank_generic(id);
    CHECK(r.rank == 4);
    CHECK(r.exceptional.empty());

    // [[N, 1], [N^2, N]] is singular over Q(N)
    MatrixQN m(2, 2);
    m.at(0, 0) = mono(1);
    m.at(0, 1) = RatFuncN(1);
    m.at(1, 0) = mono(2);
    m.at(1, 1) = mono(1);
    CHECK(rank_generic(m).rank == 1);
}

TEST_CASE("nullspace basis and normalization") {
    CHECK(nullspace_generic(MatrixQN::identity(3)).empty());

    MatrixQN m(1, 2);
    m.at(0, 0) = RatFuncN(1);
    m.at(0, 1) = mono(1);
    auto basis = nullspace_generic(m);
    REQUIRE(basis.size() == 1);
    // (-N, 1) up to normalization; ours fixes the first nonzero entry to have a
    // positive leading coefficient
    CHECK(basis[0][0] == PolyN::variable());
    CHECK(basis[0][1] == PolyN(-1));
}

TEST_CASE("determinants") {
    CHECK(determinant(MatrixQN::identity(5)).num() == PolyN(1));
    MatrixQN d(2, 2);
    d.at(0, 0) = mono(1);
    d.at(1, 1) = mono(2);
    CHECK(determinant(d).num() == PolyN::monomial(3));
    MatrixQN z(1, 2);
    CHECK_THROWS_AS(determinant(z), shape_error);
}

TEST_CASE("rank_at and specializations") {
    CHECK(rank_at(MatrixQN::identity(6), BigRational(17)) == 6);
    MatrixQN m(2, 2);
    m.at(0, 0) = mono(1);
    m.at(0, 1) = RatFuncN(1);
    m.at(1, 0) = mono(2);
    m.at(1, 1) = mono(1);
    CHECK(rank_at(m, BigRational(5)) == 1);
    CHECK(rank_at(m, BigRational(0)) == 1);  // [[0,1],[0,0]]

    MatrixQN bad(1, 1);
    bad.at(0, 0) = RatFuncN(PolyN(1), PolyN::variable() - PolyN(3));
    CHECK_THROWS_AS(rank_at(bad, BigRational(3)), specialization_error);
}

TEST_CASE("rank_generic agrees with specialization away from exceptional roots") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dims(1, 6), degs(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        MatrixQN m = random_poly_matrix(dims(rng), dims(rng), degs(rng), rng);
        RankReport r = rank_generic(m);
        // a specialization avoiding every exceptional root: try increasing N0
        for (BigRational n0(101);; n0 += 1) {
            bool root = false;
            for (const auto& p : r.exceptional)
                if (qpc::is_zero(p.eval(n0))) root = true;
            if (root) continue;
            CHECK(rank_at(m, n0) == r.rank);
            break;
        }
        // rank + nullity = cols, and M v = 0 for each basis vector
        auto basis = nullspace_generic(m);
        CHECK(r.rank + static_cast<int>(basis.size()) == m.cols());
        for (const auto& v : basis) {
            std::vector<RatFuncN> vr(v.size());
            for (size_t i = 0; i < v.size(); ++i) vr[i] = RatFuncN(v[i]);
            CHECK(in_kernel(m, vr));
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 5; ++trial) {
        MatrixQN a = random_poly_matrix(4, 4, 1, rng);
        MatrixQN b = random_poly_matrix(4, 4, 1, rng);
        MatrixQN ab(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                RatFuncN acc;
                for (int l = 0; l < 4; ++l) acc += a.at(i, l) * b.at(l, j);
                ab.at(i, j) = acc;
            }
        CHECK(determinant(ab) == determinant(a) * determinant(b));
    }
}

TEST_CASE("column-span membership") {
    MatrixQN m(3, 2);
    m.at(0, 0) = RatFuncN(1);
    m.at(1, 1) = mono(1);
    // v = (2, N^2, 0) = 2*c0 + N*c1
    std::vector<RatFuncN> v{RatFuncN(2), mono(2), RatFuncN()};
    auto x = solve_column_span(m, v);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == RatFuncN(2));
    CHECK((*x)[1] == mono(1));
    std::vector<RatFuncN> w{RatFuncN(), RatFuncN(), RatFuncN(1)};
    CHECK_FALSE(solve_column_span(m, w).has_value());
    auto xr = solve_column_span_at(m, v, BigRational(7));
    REQUIRE(xr.has_value());
    CHECK((*xr)[1] == BigRational(7));
}
