#include "vamod/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "vamod/io.hpp"
#include "vamod/lift.hpp"
#include "vamod/parse.hpp"
#include "vamod/twist.hpp"
#include "vamod/verify.hpp"

namespace vamod {

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

long inverse_window_for(const ModuleData& m) {
    return m.trunc + 2 * (std::labs(m.S.ld_num()) + m.n + 2);
}

// Diagonal seed for --t0 auto: the unique root in degree 1, the quadratic
// formula (positive square-root branch) in degree 2.
ScalarSeries auto_seed(const std::vector<MatrixSeries>& phat, const ModuleData& m) {
    size_t deg = phat.size() - 1;
    long w = inverse_window_for(m);
    if (deg == 1) {
        ScalarSeries a1 = semisimple_scalar_series(phat[1]);
        ScalarSeries a0 = semisimple_scalar_series(phat[0]);
        return a0.scale(FieldScalar(-1)) * series_inverse(a1, w);
    }
    if (deg == 2) {
        ScalarSeries a = semisimple_scalar_series(phat[2]);
        ScalarSeries b = semisimple_scalar_series(phat[1]);
        ScalarSeries c = semisimple_scalar_series(phat[0]);
        ScalarSeries disc = b * b - a * c.scale(FieldScalar(4));
        SqrtResult root = series_sqrt(disc, w);
        return (root.root - b) * series_inverse(a.scale(FieldScalar(2)), w);
    }
    throw Error("domain",
                "--t0 auto only covers polynomial degrees 1 and 2; supply a seed file");
}

int cmd_classify(const std::string& p, const std::string& q) {
    DerivationSpec d(parse_poly(p), parse_poly(q));
    emit(case_report_to_json(classify(d)));
    return 0;
}

int cmd_build(const std::string& p, const std::string& q, int case_int, bool has_alpha,
              const std::string& alpha_str, int n, long trunc, const std::string& out) {
    DerivationSpec d(parse_poly(p), parse_poly(q));
    ModuleCase c = case_from_int(case_int);
    FieldScalar alpha;
    if (has_alpha) {
        alpha = parse_scalar(alpha_str);
    } else if (c == ModuleCase::zero) {
        throw Error("usage", "--alpha is required for case 0");
    } else {
        CaseReport r = classify(d);
        alpha = c == ModuleCase::one ? r.alpha_one : r.alpha_minus_one;
    }
    ModuleData m = build_module(d, c, alpha, n, trunc);
    write_json_file(out, module_to_json(m));
    return 0;
}

int cmd_lift(const std::string& module_path, const std::string& poly_str,
             const std::string& t0, long trunc, const std::string& out) {
    ModuleData m = module_from_json(read_json_file(module_path));
    std::vector<Poly> zc = parse_zpoly(poly_str);
    if (zc.size() < 2)
        throw Error("domain", "the operator polynomial must have positive degree in Z");
    std::vector<MatrixSeries> phat;
    phat.reserve(zc.size());
    for (const Poly& c : zc) phat.push_back(evaluate(c, m.S));
    ScalarSeries seed = t0 == "auto" ? auto_seed(phat, m)
                                     : scalar_series_from_json(read_json_file(t0));
    LiftProblem pr(static_cast<int>(zc.size()) - 1, std::move(phat), std::move(seed),
                   m.n, trunc);
    MatrixSeries t = lift_root(pr);
    write_json_file(out, series_to_json(t.truncate_to(trunc * t.ram())));
    return 0;
}

int cmd_twist(const std::string& module_path, const std::string& f_str, long trunc,
              const std::string& out) {
    ModuleData m = module_from_json(read_json_file(module_path));
    QuadExt ext(parse_poly(f_str));
    TwistedStructure ts = build_twisted_structure(ext, m, trunc);
    emit(twist_report_to_json(ts.report));
    write_json_file(out, structure_to_json(ts));
    return 0;
}

int cmd_verify(const std::string& module_path, const std::string& structure_path,
               const std::string& report_path) {
    ModuleData m = module_from_json(read_json_file(module_path));
    VerifyReport rep = check_untwisted(m);
    if (!structure_path.empty()) {
        TwistedStructure ts = structure_from_json(read_json_file(structure_path));
        if (ts.base.n != m.n || !(ts.base.D.p() == m.D.p()) ||
            !(ts.base.D.q() == m.D.q()) || ts.base.caseL != m.caseL ||
            !(ts.base.alpha == m.alpha) || !agree(ts.base.S, m.S))
            throw Error("domain", "the structure was built over a different module");
        VerifyReport tw = check_twisted(ts);
        rep.precision_used = std::min(rep.precision_used, tw.precision_used);
        for (auto& c : tw.checks) rep.checks.push_back(std::move(c));
    }
    Json j = verify_report_to_json(rep);
    emit(j);
    if (!report_path.empty()) write_json_file(report_path, j);
    return rep.all_pass() ? 0 : 1;
}

Poly random_squarefree(std::mt19937_64& eng) {
    for (;;) {
        int deg = 1 + static_cast<int>(eng() % 7);
        std::vector<FieldScalar> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i)
            c[static_cast<size_t>(i)] = FieldScalar(static_cast<long>(eng() % 7) - 3);
        Poly f(std::move(c));
        if (f.degree() == deg && is_squarefree(f)) return f;
    }
}

int cmd_sweep(unsigned long seed, long count, const std::string& out) {
    Poly one(1), s = Poly::variable();
    DerivationSpec dds(one, one), s2dds(s * s, one);
    struct Entry {
        int caseL;
        ModuleData m;
    };
    const long trunc = 8;
    std::vector<Entry> mods;
    mods.push_back({1, build_module(dds, ModuleCase::one, FieldScalar(1), 2, trunc)});
    mods.push_back({0, build_module(dds, ModuleCase::zero, FieldScalar(1), 2, trunc)});
    mods.push_back(
        {-1, build_module(s2dds, ModuleCase::minus_one, FieldScalar(-1), 2, trunc)});

    std::ofstream csv(out, std::ios::binary);
    if (!csv) throw Error("io", "cannot open '" + out + "' for writing");
    csv << "case,f,predicted,computed,agree\n";

    std::mt19937_64 eng(seed);
    long mismatches = 0;
    for (long k = 0; k < count; ++k) {
        Poly f = random_squarefree(eng);
        for (const Entry& e : mods) {
            bool predicted_sigma = false;
            switch (e.caseL) {
            case 1: predicted_sigma = f.constant_term().is_zero(); break;
            case 0: predicted_sigma = f.eval(e.m.alpha).is_zero(); break;
            default: predicted_sigma = f.degree() % 2 != 0; break;
            }
            std::string predicted = predicted_sigma ? "sigma" : "id";
            std::string computed;
            bool agrees;
            try {
                TwistReport rep = twist_classify(QuadExt(f), e.m);
                computed = galois_tag_str(rep.g);
                agrees = computed == predicted;
            } catch (const PredicateMismatch&) {
                computed = "mismatch";
                agrees = false;
            }
            if (!agrees) ++mismatches;
            csv << e.caseL << "," << f.str("s") << "," << predicted << "," << computed
                << "," << (agrees ? "true" : "false") << "\n";
        }
    }
    if (!csv) throw Error("io", "write to '" + out + "' failed");
    return mismatches == 0 ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact construction of finite-dimensional modules over rational "
                 "differential fields, with quadratic-extension twists"};
    app.name("vamod");
    app.require_subcommand(1);

    std::string p_str, q_str, alpha_str, out_path, module_path, poly_str, f_str;
    std::string t0_str = "auto", structure_path, report_path, csv_path;
    int case_int = 1, n = 1;
    long trunc = 32, count = 120;
    unsigned long seed = 1;

    CLI::App* c_classify = app.add_subcommand("classify", "list admissible cases of p/q d/ds");
    c_classify->add_option("--p", p_str, "numerator polynomial in s")->required();
    c_classify->add_option("--q", q_str, "denominator polynomial in s")->required();

    CLI::App* c_build = app.add_subcommand("build", "construct a module series S");
    c_build->add_option("--p", p_str, "numerator polynomial in s")->required();
    c_build->add_option("--q", q_str, "denominator polynomial in s")->required();
    c_build->add_option("--case", case_int, "case: 1, 0, or -1")->required();
    CLI::Option* alpha_opt =
        c_build->add_option("--alpha", alpha_str, "semisimple eigenvalue (required for case 0)");
    c_build->add_option("--n", n, "module dimension (1..16)")->required();
    c_build->add_option("--trunc", trunc, "series window (default 32)");
    c_build->add_option("--out", out_path, "output module JSON path")->required();

    CLI::App* c_lift = app.add_subcommand("lift", "lift a diagonal root of P(Z) to the module");
    c_lift->add_option("--module", module_path, "module JSON path")->required();
    c_lift->add_option("--poly", poly_str, "polynomial in Z with s-coefficients")->required();
    c_lift->add_option("--t0", t0_str, "'auto' or a scalar-series JSON path");
    c_lift->add_option("--trunc", trunc, "required output window (default 32)");
    c_lift->add_option("--out", out_path, "output series JSON path")->required();

    CLI::App* c_twist = app.add_subcommand("twist", "build the structure for t^2 = f(s)");
    c_twist->add_option("--module", module_path, "module JSON path")->required();
    c_twist->add_option("--f", f_str, "square-free polynomial in s")->required();
    c_twist->add_option("--trunc", trunc, "structure window (default 32)");
    c_twist->add_option("--out", out_path, "output structure JSON path")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run axiom checks at truncation order");
    c_verify->add_option("--module", module_path, "module JSON path")->required();
    c_verify->add_option("--structure", structure_path, "structure JSON path");
    c_verify->add_option("--report", report_path, "report JSON output path")->required();

    CLI::App* c_sweep = app.add_subcommand("sweep", "randomized twist-trichotomy corpus");
    c_sweep->add_option("--seed", seed, "RNG seed (default 1)");
    c_sweep->add_option("--count", count, "extension polynomials per case (default 120)");
    c_sweep->add_option("--out", csv_path, "output CSV path")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"] = "usage";
        j["message"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(p_str, q_str);
        if (c_build->parsed())
            return cmd_build(p_str, q_str, case_int, alpha_opt->count() > 0, alpha_str, n,
                             trunc, out_path);
        if (c_lift->parsed()) return cmd_lift(module_path, poly_str, t0_str, trunc, out_path);
        if (c_twist->parsed()) return cmd_twist(module_path, f_str, trunc, out_path);
        if (c_verify->parsed()) return cmd_verify(module_path, structure_path, report_path);
        if (c_sweep->parsed()) return cmd_sweep(seed, count, csv_path);
        throw Error("usage", "no subcommand given");
    } catch (const Error& e) {
        std::cerr << error_to_json(e).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "internal";
        j["message"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 1;
    }
}

} // namespace vamod
