#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vamod/errors.hpp"
#include "vamod/poly.hpp"

using namespace vamod;

namespace {

const Poly s = Poly::variable();

Poly random_poly(std::mt19937_64& eng, int max_deg) {
    std::vector<FieldScalar> c;
    int deg = static_cast<int>(eng() % (max_deg + 1));
    for (int k = 0; k <= deg; ++k)
        c.push_back(FieldScalar(static_cast<long>(eng() % 7) - 3));
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("construction and normalization") {
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly({FieldScalar(1), FieldScalar(0), FieldScalar(0)}).degree() == 0);
    CHECK(s.degree() == 1);
    CHECK(Poly(5).is_constant());
}

TEST_CASE("text form, highest degree first") {
    Poly p = s * s * FieldScalar(3) - s * (FieldScalar(1) / FieldScalar(2)) + Poly(4);
    CHECK(p.str() == "3*s^2-1/2*s+4");
    CHECK(Poly().str() == "0");
    CHECK(s.str("z") == "z");
    CHECK((-s).str() == "-s");
}

TEST_CASE("arithmetic and evaluation") {
    Poly p = s * s - Poly(1);
    CHECK(p.eval(FieldScalar(3)) == FieldScalar(8));
    CHECK((p * p).degree() == 4);
    CHECK(p - p == Poly());
    CHECK(p.coeff(2) == FieldScalar(1));
    CHECK(p.coeff(7) == FieldScalar(0));
}

TEST_CASE("derivative and compose") {
    Poly p = s * s * s + s;
    CHECK(p.derivative() == s * s * FieldScalar(3) + Poly(1));
    Poly shifted = p.compose(s + Poly(2)); // p(s+2)
    CHECK(shifted.eval(FieldScalar(0)) == p.eval(FieldScalar(2)));
    CHECK(shifted.eval(FieldScalar(-2)) == p.eval(FieldScalar(0)));
}

TEST_CASE("divmod") {
    Poly a = s * s * s - Poly(1);
    Poly d = s - Poly(1);
    auto [quot, rem] = a.divmod(d);
    CHECK(rem.is_zero());
    CHECK(quot * d == a);
    CHECK_THROWS_AS(a.divmod(Poly()), Error);
}

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(s * s - Poly(1), s - Poly(1)) == s - Poly(1));
    CHECK(poly_gcd(s, Poly(1)) == Poly(1));
    CHECK(poly_gcd(s * s * s + s, s * s + Poly(1)) == s * s + Poly(1));
}

TEST_CASE("gcd divides both arguments") {
    std::mt19937_64 eng(3);
    for (int k = 0; k < 40; ++k) {
        Poly a = random_poly(eng, 6), b = random_poly(eng, 6);
        if (a.is_zero() && b.is_zero()) continue;
        Poly g = poly_gcd(a, b);
        CHECK(a.divmod(g).rem.is_zero());
        CHECK(b.divmod(g).rem.is_zero());
        CHECK(g == g.monic());
    }
}

TEST_CASE("squarefree examples") {
    CHECK(is_squarefree(s * s * s + Poly(1)));
    CHECK_FALSE(is_squarefree(s * s));
    CHECK(is_squarefree(s * s * s + s));
}

TEST_CASE("squarefree detects repeated factors by construction") {
    std::mt19937_64 eng(5);
    for (int k = 0; k < 30; ++k) {
        long a = static_cast<long>(eng() % 5) - 2;
        long b = static_cast<long>(eng() % 5) + 3; // distinct from a
        Poly la = s - Poly(a), lb = s - Poly(b);
        CHECK(is_squarefree(la * lb));
        CHECK_FALSE(is_squarefree(la * la * lb));
    }
}

TEST_CASE("monic leading coefficient") {
    Poly p = s * s * FieldScalar(4) + Poly(2);
    CHECK(p.monic().leading().is_one());
    CHECK(p.monic() * FieldScalar(4) == p);
}
