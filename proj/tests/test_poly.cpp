#include <doctest.h>

#include "qpc/error.hpp"
#include "qpc/poly.hpp"
#include "qpc/ratfunc.hpp"

using namespace qpc;

TEST_CASE("polynomial arithmetic basics") {
    PolyN n = PolyN::variable();
    PolyN f = n * n - PolyN(3) * n + PolyN(1);  // N^2-3N+1
    CHECK(f.degree() == 2);
    CHECK(f.eval(BigRational(4)) == BigRational(5));
    CHECK(f.str() == "N^2-3*N+1");

    PolyN g = n - PolyN(2);
    CHECK(PolyN::gcd(f, g).degree() == 0);  // coprime

    // (N-4)(N^2-3N+1)^2 = N^5-10N^4+35N^3-50N^2+25N-4, expanded by hand
    PolyN prod = (n - PolyN(4)) * f * f;
    CHECK(prod == PolyN({-4, 25, -50, 35, -10, 1}));
}

TEST_CASE("divmod and exact division") {
    PolyN n = PolyN::variable();
    PolyN a = n * n * n - PolyN(1);
    PolyN b = n - PolyN(1);
    PolyN q, r;
    PolyN::divmod(a, b, q, r);
    CHECK(r.is_zero());
    CHECK(q == n * n + n + PolyN(1));
    CHECK(a.divexact(b) == q);
    CHECK_THROWS(a.divexact(n - PolyN(2)));
}

TEST_CASE("content and primitive part") {
    PolyN p({make_rational(2, 3), make_rational(4, 3), make_rational(2, 1)});
    BigRational c = p.content();
    CHECK(c == make_rational(2, 3));
    PolyN prim = p.primitive_part();
    CHECK(prim == PolyN({1, 2, 3}));
    CHECK(prim.content() == 1);
}

TEST_CASE("gcd of polynomials with a common factor") {
    PolyN n = PolyN::variable();
    PolyN f = (n - PolyN(2)) * (n + PolyN(5));
    PolyN g = (n - PolyN(2)) * (n * n + PolyN(1));
    CHECK(PolyN::gcd(f, g) == n - PolyN(2));
}

TEST_CASE("rational functions reduce and evaluate") {
    PolyN n = PolyN::variable();
    RatFuncN f(n * n - PolyN(1), n - PolyN(1));  // (N^2-1)/(N-1) = N+1
    CHECK(f.is_polynomial());
    CHECK(f.num() == n + PolyN(1));

    RatFuncN g(PolyN(1), n);
    RatFuncN s = f + g;  // N+1 + 1/N = (N^2+N+1)/N
    CHECK(s.num() == n * n + n + PolyN(1));
    CHECK(s.den() == n);
    CHECK(s.eval(BigRational(2)) == make_rational(7, 2));
    CHECK_THROWS_AS(g.eval(BigRational(0)), specialization_error);

    // denominator kept monic
    RatFuncN h(PolyN(1), PolyN(2) * n);
    CHECK(h.den() == n);
    CHECK(h.num() == PolyN(make_rational(1, 2)));
}
