#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vamod/errors.hpp"
#include "vamod/series.hpp"

using namespace vamod;

namespace {

FieldScalar fs(long num, long den = 1) { return FieldScalar(num) / FieldScalar(den); }

ScalarSeries sseries(long lo, std::vector<long> coeffs, long trunc) {
    std::vector<FieldScalar> c;
    for (long v : coeffs) c.push_back(FieldScalar(v));
    return ScalarSeries::from_coeffs(FieldScalar(), 1, lo, std::move(c), trunc);
}

ScalarSeries random_series(std::mt19937_64& eng, int ram) {
    long lo = static_cast<long>(eng() % 7) - 3;
    std::vector<FieldScalar> c;
    for (int k = 0; k < 5; ++k) c.push_back(FieldScalar(static_cast<long>(eng() % 9) - 4));
    return ScalarSeries::from_coeffs(FieldScalar(), ram, lo, std::move(c), lo + 6);
}

} // namespace

TEST_CASE("multiplication examples") {
    ScalarSeries a = sseries(0, {1, 1}, 8);   // 1+x
    ScalarSeries b = sseries(0, {1, -1}, 8);  // 1-x
    ScalarSeries expect = sseries(0, {1, 0, -1}, 8); // 1-x^2
    CHECK(agree(a * b, expect));
    CHECK((a * b).trunc_num() == 8);

    ScalarSeries half = ScalarSeries::monomial(FieldScalar(), 2, 1, FieldScalar(1));
    ScalarSeries x = half * half;
    CHECK(x.ram() == 2);
    CHECK(x.ld_num() == 2); // exponent 2/2 = 1
    CHECK(x.coeff(2).is_one());
    CHECK(x.is_exact());
}

TEST_CASE("matrix series multiplication with nilpotent part") {
    const int n = 2;
    UTMatrix id = UTMatrix::identity(n), j = UTMatrix::jordan(n);
    auto a = MatrixSeries::from_coeffs(UTMatrix(n), 1, 0, {id, j}, 8);  // I + Jx
    auto b = MatrixSeries::from_coeffs(UTMatrix(n), 1, 0, {id, -j}, 8); // I - Jx
    CHECK(agree(a * b, MatrixSeries::constant(UTMatrix(n), id)));
}

TEST_CASE("exact zero and window zero") {
    ScalarSeries z{FieldScalar()};
    CHECK(z.is_exact());
    CHECK(z.is_zero_window());
    ScalarSeries wz = ScalarSeries::zero(FieldScalar(), 1, 5);
    CHECK_FALSE(wz.is_exact());
    CHECK(wz.is_zero_window());
    CHECK_THROWS_AS(wz.coeff(5), PrecisionExhausted);
    CHECK(wz.coeff(4).is_zero());
}

TEST_CASE("coefficient access beyond the window throws") {
    ScalarSeries a = sseries(0, {1, 2}, 4);
    CHECK(a.coeff(3).is_zero());
    CHECK_THROWS_AS(a.coeff(4), PrecisionExhausted);
}

TEST_CASE("inverse of 1-x is the geometric series") {
    ScalarSeries a = sseries(0, {1, -1}, 8);
    ScalarSeries inv = series_inverse(a);
    for (long e = 0; e < 8; ++e) CHECK(inv.coeff(e).is_one());
    CHECK(agree(a * inv, sseries(0, {1}, 8)));
}

TEST_CASE("inverse of an exact series needs a window") {
    ScalarSeries one_minus_x =
        ScalarSeries::from_coeffs(FieldScalar(), 1, 0, {FieldScalar(1), FieldScalar(-1)});
    CHECK(one_minus_x.is_exact());
    CHECK_THROWS_AS(series_inverse(one_minus_x), PrecisionExhausted);
    ScalarSeries inv = series_inverse(one_minus_x, 6);
    for (long e = 0; e < 6; ++e) CHECK(inv.coeff(e).is_one());
}

TEST_CASE("matrix series inverse via the nilpotent route") {
    // J_2 + xI has singular leading coefficient but invertible diagonal series.
    const int n = 2;
    UTMatrix id = UTMatrix::identity(n), j = UTMatrix::jordan(n);
    auto a = MatrixSeries::from_coeffs(UTMatrix(n), 1, 0, {j, id}, 8);
    MatrixSeries inv = series_inverse(a, 8);
    CHECK(inv.ld_num() == -2);
    CHECK(inv.coeff(-2) == -j);
    CHECK(inv.coeff(-1) == id);
    MatrixSeries expect =
        MatrixSeries::from_coeffs(UTMatrix(n), 1, -2, {-j, id}, 6);
    CHECK(agree(inv, expect));
    CHECK(agree(a * inv, MatrixSeries::constant(UTMatrix(n), id)));
}

TEST_CASE("matrix series with a vanishing diagonal entry is not invertible") {
    const int n = 2;
    auto a = MatrixSeries::constant(UTMatrix(n), UTMatrix::jordan(n));
    try {
        series_inverse(a, 4);
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        CHECK(e.witness == UTMatrix::jordan(n).str());
    }
}

TEST_CASE("derivative examples") {
    ScalarSeries x2 = ScalarSeries::monomial(FieldScalar(), 1, 2, FieldScalar(1));
    ScalarSeries d = x2.derivative();
    CHECK(d.ld_num() == 1);
    CHECK(d.coeff(1) == FieldScalar(2));

    ScalarSeries root = ScalarSeries::monomial(FieldScalar(), 2, 1, FieldScalar(1));
    ScalarSeries dr = root.derivative();
    CHECK(dr.ram() == 2);
    CHECK(dr.ld_num() == -1);
    CHECK(dr.coeff(-1) == fs(1, 2));

    auto c = MatrixSeries::constant(UTMatrix(2), UTMatrix::identity(2));
    CHECK(c.derivative().is_zero_window());
    CHECK(c.derivative().is_exact());
}

TEST_CASE("derivative keeps rationals canonical at ramification 2") {
    // exponent 4/2 scales by 2; the scale factor must compare equal to 2
    ScalarSeries a = ScalarSeries::monomial(FieldScalar(), 2, 4, FieldScalar(1));
    ScalarSeries d = a.derivative();
    CHECK(d.coeff(2) == FieldScalar(2));
    CHECK((d.coeff(2) - FieldScalar(2)).is_zero());
}

TEST_CASE("polynomial evaluation at a series") {
    const Poly s = Poly::variable();
    ScalarSeries x = ScalarSeries::monomial(FieldScalar(), 1, 1, FieldScalar(1));
    CHECK(agree(evaluate(s * s, x),
                ScalarSeries::monomial(FieldScalar(), 1, 2, FieldScalar(1))));

    const int n = 2;
    UTMatrix id = UTMatrix::identity(n), j = UTMatrix::jordan(n);
    auto sm = MatrixSeries::from_coeffs(UTMatrix(n), 1, 0, {j, id}); // J_2 + xI, exact
    MatrixSeries v = evaluate(s * s * s + Poly(1), sm);
    CHECK(v.coeff(0) == id);           // 1 + 0
    CHECK(v.coeff(2) == j * FieldScalar(3)); // 3x^2 J
    CHECK(v.coeff(3) == id);           // x^3 I
    CHECK(v.coeff(1) == UTMatrix(n));
    CHECK(v.is_exact());

    CHECK(agree(evaluate(Poly(1), x),
                ScalarSeries::constant(FieldScalar(), FieldScalar(1))));
}

TEST_CASE("square root of 4+x follows the binomial series") {
    ScalarSeries a = sseries(0, {4, 1}, 6);
    SqrtResult r = series_sqrt(a);
    CHECK_FALSE(r.ramified);
    CHECK(r.root.ram() == 1);
    CHECK(r.root.coeff(0) == FieldScalar(2));
    CHECK(r.root.coeff(1) == fs(1, 4));
    CHECK(r.root.coeff(2) == fs(-1, 64));
    CHECK(agree(r.root * r.root, a));
}

TEST_CASE("square root with odd valuation ramifies") {
    ScalarSeries a = sseries(1, {1, 0, 1}, 9); // x + x^3
    SqrtResult r = series_sqrt(a);
    CHECK(r.ramified);
    CHECK(r.root.ram() == 2);
    CHECK(r.root.ld_num() == 1); // exponent 1/2
    CHECK(r.root.coeff(1).is_one());
    CHECK(r.root.coeff(5) == fs(1, 2));  // x^{5/2}
    CHECK(r.root.coeff(9) == fs(-1, 8)); // x^{9/2}
    CHECK(agree(r.root * r.root, a));
}

TEST_CASE("square root of 1 is 1") {
    ScalarSeries one = sseries(0, {1}, 5);
    SqrtResult r = series_sqrt(one);
    CHECK_FALSE(r.ramified);
    CHECK(agree(r.root, one));
}

TEST_CASE("square root adjoining a new radicand") {
    ScalarSeries a = sseries(0, {2, 1}, 5); // 2 + x
    SqrtResult r = series_sqrt(a);
    CHECK(r.root.coeff(0).level() == TowerLevel::extended);
    CHECK(agree(r.root * r.root, a));
}

TEST_CASE("coset support examples") {
    ScalarSeries halves = ScalarSeries::from_coeffs(
        FieldScalar(), 2, 1, {FieldScalar(1), FieldScalar(0), FieldScalar(1)}, 4);
    CHECK(supported_on_coset(halves, 1, 2)); // x^{1/2} + x^{3/2}
    ScalarSeries ints = sseries(0, {1, 1}, 4);
    CHECK(supported_on_coset(ints, 0, 1));
    ScalarSeries mixed = ScalarSeries::from_coeffs(
        FieldScalar(), 2, 0, {FieldScalar(1), FieldScalar(1)}, 4);
    CHECK_FALSE(supported_on_coset(mixed, 1, 2)); // 1 + x^{1/2}
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int ram = (trial % 2) ? 2 : 1;
        ScalarSeries a = random_series(eng, ram);
        ScalarSeries b = random_series(eng, ram);
        ScalarSeries c = random_series(eng, ram);
        CHECK(agree((a + b) + c, a + (b + c)));
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree(a * (b + c), a * b + a * c));
        CHECK(agree(a * b, b * a));
    }
}

TEST_CASE("derivative is a derivation") {
    std::mt19937_64 eng(37);
    for (int trial = 0; trial < 25; ++trial) {
        ScalarSeries a = random_series(eng, 1);
        ScalarSeries b = random_series(eng, 1);
        CHECK(agree((a * b).derivative(), a.derivative() * b + a * b.derivative()));
    }
}

TEST_CASE("inverse times original is one") {
    std::mt19937_64 eng(41);
    for (int trial = 0; trial < 25; ++trial) {
        ScalarSeries a = random_series(eng, 1);
        if (!a.has_support()) continue;
        ScalarSeries inv = series_inverse(a);
        ScalarSeries one = ScalarSeries::constant(FieldScalar(), FieldScalar(1));
        CHECK(agree(a * inv, one));
    }
}

TEST_CASE("square of sqrt returns the input and the flag tracks parity") {
    std::mt19937_64 eng(43);
    for (int trial = 0; trial < 25; ++trial) {
        ScalarSeries a = random_series(eng, 1);
        if (!a.has_support()) continue;
        FieldScalar lead = a.lc();
        if (lead.level() == TowerLevel::extended) continue;
        SqrtResult r = series_sqrt(a);
        CHECK(r.ramified == ((a.ld_num() % 2) != 0));
        CHECK(agree(r.root * r.root, a));
    }
}

TEST_CASE("multiplication reports exactly the derivable precision") {
    ScalarSeries a = sseries(2, {1, 5}, 7);   // known to x^7
    ScalarSeries b = sseries(-1, {3, 0, 1}, 4); // known to x^4
    // min(lo_a + trunc_b, lo_b + trunc_a) = min(2+4, -1+7) = 6
    CHECK((a * b).trunc_num() == 6);
    ScalarSeries exact = ScalarSeries::monomial(FieldScalar(), 1, 3, FieldScalar(2));
    CHECK((a * exact).trunc_num() == 10); // shift by the monomial exponent
}

TEST_CASE("truncate_to and shift bookkeeping") {
    ScalarSeries a = sseries(0, {1, 2, 3, 4}, 8);
    ScalarSeries t = a.truncate_to(2);
    CHECK(t.trunc_num() == 2);
    CHECK(t.coeff(1) == FieldScalar(2));
    CHECK_THROWS_AS(t.coeff(2), PrecisionExhausted);
    ScalarSeries sh = a.shift(3);
    CHECK(sh.ld_num() == 3);
    CHECK(sh.trunc_num() == 11);
    CHECK(sh.coeff(4) == FieldScalar(2));
}

TEST_CASE("ramification rescaling and unification") {
    ScalarSeries a = sseries(1, {1, 1}, 4); // x + x^2 known mod x^4
    ScalarSeries up = a.with_ram(2);
    CHECK(up.ld_num() == 2);
    CHECK(up.trunc_num() == 8);
    CHECK(up.coeff(4).is_one());
    CHECK(up.coeff(3).is_zero());
    CHECK(agree(a, up));
    CHECK_THROWS_AS(a.with_ram(3), RamificationCap);
}

TEST_CASE("agreement is limited to the shared window") {
    ScalarSeries a = sseries(0, {1, 1}, 2);
    ScalarSeries b = sseries(0, {1, 1, 7}, 4); // differs only at x^2
    CHECK(agree(a, b)); // x^2 lies beyond a's window
    ScalarSeries c = sseries(0, {1, 2}, 2);
    CHECK_FALSE(agree(a, c));
}

TEST_CASE("semisimple diagonal extraction") {
    const int n = 2;
    UTMatrix id = UTMatrix::identity(n), j = UTMatrix::jordan(n);
    auto sm = MatrixSeries::from_coeffs(UTMatrix(n), 1, 0, {j, id}, 6);
    ScalarSeries diag = semisimple_scalar_series(sm);
    CHECK(diag.ld_num() == 1);
    CHECK(diag.coeff(1).is_one());
    UTMatrix bad(n);
    bad.set(0, 0, FieldScalar(1));
    bad.set(1, 1, FieldScalar(2));
    auto badm = MatrixSeries::constant(UTMatrix(n), bad);
    CHECK_THROWS_AS(semisimple_scalar_series(badm), Error);
}
