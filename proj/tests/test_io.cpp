#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "vamod/errors.hpp"
#include "vamod/io.hpp"

using namespace vamod;

namespace {

const Poly s = Poly::variable();

ModuleData sample_module(int n = 2, long trunc = 8) {
    return build_module(DerivationSpec(Poly(1), Poly(1)), ModuleCase::one, FieldScalar(1),
                        n, trunc);
}

} // namespace

TEST_CASE("matrix serialization shape") {
    Json j = matrix_to_json(UTMatrix::jordan(2));
    CHECK(j["n"] == 2);
    CHECK(j["rows"][0][0] == "0");
    CHECK(j["rows"][0][1] == "1");
    CHECK(j["rows"][1][0] == "0");
    CHECK(j["rows"][1][1] == "0");
    CHECK(j.dump() == R"({"n":2,"rows":[["0","1"],["0","0"]]})");
}

TEST_CASE("matrix round-trip") {
    UTMatrix m(3);
    m.set(0, 0, FieldScalar(1) / FieldScalar(2));
    m.set(0, 2, FieldScalar::i());
    m.set(1, 1, FieldScalar(-3));
    m.set(2, 2, FieldScalar(5));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("matrix validation") {
    Json j = matrix_to_json(UTMatrix::jordan(2));
    j["rows"][1][0] = "7"; // below the diagonal
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
    Json wrong = matrix_to_json(UTMatrix::jordan(2));
    wrong["rows"].erase(1);
    CHECK_THROWS_AS(matrix_from_json(wrong), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::object()), ParseError);
}

TEST_CASE("scalar series round-trip") {
    ScalarSeries a = ScalarSeries::from_coeffs(
        FieldScalar(), 2, -1,
        {FieldScalar(1) / FieldScalar(2), FieldScalar(0), FieldScalar(-3)}, 9);
    Json j = series_to_json(a);
    CHECK(j["ram"] == 2);
    CHECK(j["lo"] == -1);
    CHECK(j["trunc"] == 9);
    CHECK(j["coeffs"].size() == 10); // dense up to the truncation bound
    ScalarSeries b = scalar_series_from_json(j);
    CHECK(a == b);
}

TEST_CASE("exact series carry a null truncation") {
    ScalarSeries a = ScalarSeries::monomial(FieldScalar(), 1, 3, FieldScalar(7));
    Json j = series_to_json(a);
    CHECK(j["trunc"].is_null());
    ScalarSeries b = scalar_series_from_json(j);
    CHECK(b.is_exact());
    CHECK(a == b);
}

TEST_CASE("window-zero series round-trip") {
    ScalarSeries a = ScalarSeries::zero(FieldScalar(), 1, 5);
    ScalarSeries b = scalar_series_from_json(series_to_json(a));
    CHECK(a == b);
    CHECK(b.is_zero_window());
    CHECK(b.trunc_num() == 5);
}

TEST_CASE("matrix series round-trip") {
    ModuleData m = sample_module(2, 8);
    Json j = series_to_json(m.S);
    MatrixSeries back = matrix_series_from_json(j, 2);
    CHECK(back == m.S);
    CHECK_THROWS_AS(matrix_series_from_json(j, 3), ParseError);
}

TEST_CASE("module round-trip") {
    ModuleData m = build_module(DerivationSpec(Poly(1) + s, Poly(1) - s), ModuleCase::one,
                                FieldScalar(1), 3, 10);
    Json j = module_to_json(m);
    CHECK(j["kind"] == "module");
    CHECK(j["p"] == "s+1");
    CHECK(j["q"] == "-s+1");
    CHECK(j["case"] == 1);
    ModuleData back = module_from_json(j);
    CHECK(back.n == m.n);
    CHECK(back.caseL == m.caseL);
    CHECK(back.alpha == m.alpha);
    CHECK(back.trunc == m.trunc);
    CHECK(back.S == m.S);
    CHECK(back.D.p() == m.D.p());
    CHECK(back.D.q() == m.D.q());
    CHECK(module_to_json(back).dump() == j.dump());
}

TEST_CASE("structure round-trip recomputes the classification") {
    ModuleData m = sample_module(2, 16);
    TwistedStructure ts = build_twisted_structure(QuadExt(s), m, 8);
    Json j = structure_to_json(ts);
    CHECK(j["kind"] == "twisted_structure");
    CHECK(j["g"] == "sigma");
    CHECK(j["ram"] == 2);
    TwistedStructure back = structure_from_json(j);
    CHECK(back.g == ts.g);
    CHECK(back.ram == ts.ram);
    CHECK(back.T == ts.T);
    CHECK(back.ext.f() == ts.ext.f());
    CHECK(back.report.predicate == ts.report.predicate);
    CHECK(back.report.valuation == ts.report.valuation);
    CHECK(structure_to_json(back).dump() == j.dump());
}

TEST_CASE("case report shape") {
    Json j = case_report_to_json(classify(DerivationSpec(s * s, Poly(1))));
    CHECK(j["cases"].size() == 3);
    CHECK(j["cases"][0]["case"] == 1);
    CHECK(j["cases"][0]["admissible"] == false);
    CHECK(j["cases"][0]["alpha"].is_null());
    CHECK(j["cases"][1]["case"] == 0);
    CHECK(j["cases"][1]["admissible"] == true);
    CHECK(j["cases"][2]["case"] == -1);
    CHECK(j["cases"][2]["admissible"] == true);
    CHECK(j["cases"][2]["alpha"] == "-1");
}

TEST_CASE("twist report shape") {
    ModuleData m = sample_module(1, 10);
    TwistReport rep = twist_classify(QuadExt(s * s * s + s), m);
    Json j = twist_report_to_json(rep);
    CHECK(j["g"] == "sigma");
    CHECK(j["valuation"] == 1);
    CHECK(j["predicate"] == "f0_zero");
    CHECK(j["degree_relaxed"] == false);
}

TEST_CASE("verify report round-trip") {
    ModuleData m = sample_module(2, 8);
    VerifyReport rep = check_untwisted(m);
    Json j = verify_report_to_json(rep);
    CHECK(j["all_pass"] == true);
    VerifyReport back = verify_report_from_json(j);
    CHECK(back.all_pass() == rep.all_pass());
    CHECK(back.checks.size() == rep.checks.size());
    CHECK(back.caveat == rep.caveat);
    CHECK(back.precision_used == rep.precision_used);
    for (size_t k = 0; k < rep.checks.size(); ++k) {
        CHECK(back.checks[k].name == rep.checks[k].name);
        CHECK(back.checks[k].pass == rep.checks[k].pass);
    }
}

TEST_CASE("error serialization") {
    Json j = error_to_json(Inadmissible("case 1 needs p(0) and q(0) nonzero"));
    CHECK(j["error"] == "inadmissible");
    CHECK(j["message"] == "case 1 needs p(0) and q(0) nonzero");
}

TEST_CASE("file round-trip") {
    std::string path = "io_test_artifact.json";
    ModuleData m = sample_module(2, 8);
    write_json_file(path, module_to_json(m));
    Json j = read_json_file(path);
    CHECK(module_from_json(j).S == m.S);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file(path), Error);
}
