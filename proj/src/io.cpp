#include "vamod/io.hpp"

#include <fstream>

#include "vamod/parse.hpp"

namespace vamod {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

template <class S, class CoeffToJson>
Json series_to_json_impl(const S& s, CoeffToJson coeff_to_json) {
    Json j;
    j["ram"] = s.ram();
    long lo;
    long hi;
    if (s.is_exact()) {
        lo = s.has_support() ? s.ld_num() : 0;
        hi = s.has_support() ? s.hi_num() : lo;
        j["lo"] = lo;
        j["trunc"] = nullptr;
    } else {
        lo = s.has_support() ? s.ld_num() : s.trunc_num();
        hi = s.trunc_num();
        j["lo"] = lo;
        j["trunc"] = s.trunc_num();
    }
    Json coeffs = Json::array();
    for (long e = lo; e < hi; ++e) coeffs.push_back(coeff_to_json(s.coeff(e)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

struct SeriesShape {
    int ram;
    long lo;
    long trunc; // kExact when null
};

SeriesShape series_shape_from_json(const Json& j) {
    SeriesShape sh;
    sh.ram = j.at("ram").get<int>();
    sh.lo = j.at("lo").get<long>();
    sh.trunc = j.at("trunc").is_null() ? ScalarSeries::kExact : j.at("trunc").get<long>();
    return sh;
}

} // namespace

Json matrix_to_json(const UTMatrix& m) {
    Json j;
    j["n"] = m.dim();
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

UTMatrix matrix_from_json(const Json& j) {
    return guarded("matrix", [&] {
        int n = j.at("n").get<int>();
        UTMatrix m(n);
        const Json& rows = j.at("rows");
        if (!rows.is_array() || rows.size() != static_cast<size_t>(n))
            bad("matrix needs exactly n rows");
        for (int i = 0; i < n; ++i) {
            const Json& row = rows[static_cast<size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<size_t>(n))
                bad("matrix rows need exactly n entries");
            for (int k = 0; k < n; ++k) {
                FieldScalar v = parse_scalar(row[static_cast<size_t>(k)].get<std::string>());
                if (k < i) {
                    if (!v.is_zero()) bad("matrix is not upper triangular");
                } else {
                    m.set(i, k, v);
                }
            }
        }
        return m;
    });
}

Json series_to_json(const ScalarSeries& s) {
    return series_to_json_impl(s, [](const FieldScalar& c) { return Json(c.str()); });
}

Json series_to_json(const MatrixSeries& s) {
    return series_to_json_impl(s, [](const UTMatrix& c) { return matrix_to_json(c); });
}

ScalarSeries scalar_series_from_json(const Json& j) {
    return guarded("series", [&] {
        SeriesShape sh = series_shape_from_json(j);
        std::vector<FieldScalar> coeffs;
        for (const Json& c : j.at("coeffs")) coeffs.push_back(parse_scalar(c.get<std::string>()));
        return ScalarSeries::from_coeffs(FieldScalar(), sh.ram, sh.lo, std::move(coeffs),
                                         sh.trunc);
    });
}

MatrixSeries matrix_series_from_json(const Json& j, int n) {
    return guarded("series", [&] {
        SeriesShape sh = series_shape_from_json(j);
        std::vector<UTMatrix> coeffs;
        for (const Json& c : j.at("coeffs")) {
            UTMatrix m = matrix_from_json(c);
            if (m.dim() != n) bad("matrix coefficient dimension mismatch");
            coeffs.push_back(std::move(m));
        }
        return MatrixSeries::from_coeffs(UTMatrix(n), sh.ram, sh.lo, std::move(coeffs),
                                         sh.trunc);
    });
}

Json module_to_json(const ModuleData& m) {
    Json j;
    j["kind"] = "module";
    j["n"] = m.n;
    j["p"] = m.D.p().str("s");
    j["q"] = m.D.q().str("s");
    j["case"] = static_cast<int>(m.caseL);
    j["alpha"] = m.alpha.str();
    j["trunc"] = m.trunc;
    j["S"] = series_to_json(m.S);
    return j;
}

ModuleData module_from_json(const Json& j) {
    return guarded("module", [&] {
        if (j.value("kind", "") != "module") bad("expected a module artifact");
        int n = j.at("n").get<int>();
        DerivationSpec d(parse_poly(j.at("p").get<std::string>()),
                         parse_poly(j.at("q").get<std::string>()));
        ModuleCase c = case_from_int(j.at("case").get<int>());
        FieldScalar alpha = parse_scalar(j.at("alpha").get<std::string>());
        long trunc = j.at("trunc").get<long>();
        MatrixSeries s = matrix_series_from_json(j.at("S"), n);
        return ModuleData{n, d, c, alpha, trunc, std::move(s)};
    });
}

Json structure_to_json(const TwistedStructure& ts) {
    Json j;
    j["kind"] = "twisted_structure";
    j["f"] = ts.ext.f().str("s");
    j["g"] = galois_tag_str(ts.g);
    j["ram"] = ts.ram;
    j["base"] = module_to_json(ts.base);
    j["T"] = series_to_json(ts.T);
    return j;
}

TwistedStructure structure_from_json(const Json& j) {
    return guarded("structure", [&] {
        if (j.value("kind", "") != "twisted_structure") bad("expected a structure artifact");
        QuadExt ext(parse_poly(j.at("f").get<std::string>()));
        ModuleData base = module_from_json(j.at("base"));
        std::string g = j.at("g").get<std::string>();
        if (g != "id" && g != "sigma") bad("unknown involution tag '" + g + "'");
        int ram = j.at("ram").get<int>();
        MatrixSeries t = matrix_series_from_json(j.at("T"), base.n);
        TwistReport rep = twist_classify(ext, base);
        return TwistedStructure{std::move(base), std::move(ext),
                                g == "sigma" ? GaloisTag::sigma : GaloisTag::id, ram,
                                std::move(t), std::move(rep)};
    });
}

Json case_report_to_json(const CaseReport& r) {
    Json j;
    j["kind"] = "case_report";
    j["p"] = r.D.p().str("s");
    j["q"] = r.D.q().str("s");
    Json cases = Json::array();
    {
        Json c;
        c["case"] = 1;
        c["admissible"] = r.case_one;
        c["alpha"] = r.case_one ? Json(r.alpha_one.str()) : Json(nullptr);
        cases.push_back(std::move(c));
    }
    {
        Json c;
        c["case"] = 0;
        c["admissible"] = true;
        c["alpha_constraint"] = "any alpha with p(alpha)*q(alpha) != 0";
        cases.push_back(std::move(c));
    }
    {
        Json c;
        c["case"] = -1;
        c["admissible"] = r.case_minus_one;
        c["alpha"] = r.case_minus_one ? Json(r.alpha_minus_one.str()) : Json(nullptr);
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    return j;
}

Json twist_report_to_json(const TwistReport& r) {
    Json j;
    j["g"] = galois_tag_str(r.g);
    j["valuation"] = r.valuation;
    j["predicate"] = r.predicate;
    j["degree_relaxed"] = r.degree_relaxed;
    return j;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    j["kind"] = "verify_report";
    j["caveat"] = r.caveat;
    j["precision_used"] = r.precision_used;
    j["all_pass"] = r.all_pass();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["witness"] = c.pass ? Json(nullptr) : Json(c.witness);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

VerifyReport verify_report_from_json(const Json& j) {
    return guarded("report", [&] {
        if (j.value("kind", "") != "verify_report") bad("expected a verify report");
        VerifyReport r;
        r.caveat = j.at("caveat").get<std::string>();
        r.precision_used = j.at("precision_used").get<long>();
        for (const Json& c : j.at("checks")) {
            CheckEntry e;
            e.name = c.at("name").get<std::string>();
            e.pass = c.at("pass").get<bool>();
            if (!c.at("witness").is_null()) e.witness = c.at("witness").get<std::string>();
            r.checks.push_back(std::move(e));
        }
        return r;
    });
}

Json error_to_json(const Error& e) {
    Json j;
    j["error"] = e.kind();
    j["message"] = e.what();
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) throw Error("io", "write to '" + path + "' failed");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

} // namespace vamod
