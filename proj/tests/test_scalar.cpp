#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vamod/errors.hpp"
#include "vamod/scalar.hpp"

using namespace vamod;

TEST_CASE("rational construction and text form") {
    CHECK(FieldScalar(3).str() == "3");
    CHECK(FieldScalar(Rat(-1, 2)).str() == "-1/2");
    CHECK(FieldScalar(0).is_zero());
    CHECK(FieldScalar(1).is_one());
    CHECK((FieldScalar(4) / FieldScalar(6)).str() == "2/3");
}

TEST_CASE("gaussian arithmetic") {
    FieldScalar i = FieldScalar::i();
    CHECK(i * i == FieldScalar(-1));
    CHECK((i * i * i * i).is_one());
    CHECK(i.str() == "1*i");
    CHECK((FieldScalar(Rat(1, 2)) + FieldScalar(Rat(3, 4)) * i).str() == "1/2+3/4*i");
    CHECK(i.inverse() == -i);
    CHECK(i.level() == TowerLevel::gaussian);
}

TEST_CASE("inverse of zero is rejected") {
    CHECK_THROWS_AS(FieldScalar(0).inverse(), Error);
    try {
        FieldScalar(0).inverse();
    } catch (const Error& e) {
        CHECK(e.kind() == "division_by_zero");
    }
}

TEST_CASE("adjoin_sqrt of a perfect square stays in the tower") {
    SqrtOutcome r = adjoin_sqrt(FieldScalar(4));
    CHECK_FALSE(r.extended);
    CHECK(r.root == FieldScalar(2));
    CHECK(r.root.level() == TowerLevel::rational);
}

TEST_CASE("adjoin_sqrt of 2 extends the tower") {
    SqrtOutcome r = adjoin_sqrt(FieldScalar(2));
    CHECK(r.extended);
    CHECK(r.root.level() == TowerLevel::extended);
    CHECK(r.root * r.root == FieldScalar(2));
}

TEST_CASE("adjoin_sqrt of -1 resolves to i without extension") {
    SqrtOutcome r = adjoin_sqrt(FieldScalar(-1));
    CHECK_FALSE(r.extended);
    CHECK(r.root * r.root == FieldScalar(-1));
    CHECK(r.root.level() == TowerLevel::gaussian);
}

TEST_CASE("extended arithmetic") {
    FieldScalar r2 = adjoin_sqrt(FieldScalar(2)).root;
    FieldScalar v = FieldScalar(1) + r2;
    CHECK(v * v == FieldScalar(3) + r2 * FieldScalar(2));
    CHECK((v * v.inverse()).is_one());
    CHECK((r2 * r2).level() == TowerLevel::rational);
}

TEST_CASE("mixing distinct radicands throws TowerExhausted") {
    FieldScalar r2 = adjoin_sqrt(FieldScalar(2)).root;
    FieldScalar r3 = adjoin_sqrt(FieldScalar(3)).root;
    CHECK_THROWS_AS(r2 + r3, TowerExhausted);
    CHECK_THROWS_AS(r2 * r3, TowerExhausted);
    CHECK_THROWS_AS(adjoin_sqrt(FieldScalar(3), r2), TowerExhausted);
}

TEST_CASE("second root inside an extended tower resolves when possible") {
    FieldScalar r2 = adjoin_sqrt(FieldScalar(2)).root;
    // sqrt(8) relative to Q(sqrt(2)) is 2*sqrt(2), already present.
    SqrtOutcome r8 = adjoin_sqrt(FieldScalar(8), r2);
    CHECK_FALSE(r8.extended);
    CHECK(r8.root == r2 * FieldScalar(2));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 eng(7);
    auto draw = [&]() {
        long a = static_cast<long>(eng() % 19) - 9;
        long b = static_cast<long>(eng() % 9) + 1;
        long c = static_cast<long>(eng() % 19) - 9;
        return (FieldScalar(a) + FieldScalar(c) * FieldScalar::i()) / FieldScalar(b);
    };
    for (int k = 0; k < 50; ++k) {
        FieldScalar a = draw(), b = draw(), c = draw();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("extended field axioms with a live radicand") {
    FieldScalar r5 = adjoin_sqrt(FieldScalar(5)).root;
    std::mt19937_64 eng(11);
    auto draw = [&]() {
        long a = static_cast<long>(eng() % 11) - 5;
        long b = static_cast<long>(eng() % 11) - 5;
        return FieldScalar(a) + FieldScalar(b) * r5;
    };
    for (int k = 0; k < 25; ++k) {
        FieldScalar a = draw(), b = draw(), c = draw();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("pure imaginary and extended text forms round-trip shape") {
    FieldScalar r2 = adjoin_sqrt(FieldScalar(2)).root;
    FieldScalar v = FieldScalar(1) + (FieldScalar(Rat(1, 2)) + FieldScalar::i()) * r2;
    CHECK(v.str() == "(1)+(1/2+1*i)*sqrt(2)");
    CHECK(r2.str() == "(0)+(1)*sqrt(2)");
}

TEST_CASE("pow matches repeated multiplication") {
    FieldScalar a = FieldScalar(Rat(2, 3)) + FieldScalar::i();
    FieldScalar acc(1);
    for (unsigned e = 0; e <= 6; ++e) {
        CHECK(a.pow(e) == acc);
        acc = acc * a;
    }
}
