#include "vamod/verify.hpp"

#include <cstdlib>

#include "vamod/errors.hpp"

namespace vamod {

const char* const kVerifyCaveat =
    "generator-level axiom checks at finite truncation; the full twisted "
    "Borcherds identity is not verified directly";

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

template <class R>
long known_bound(const PuiseuxSeries<R>& s) {
    if (s.is_exact()) return PuiseuxSeries<R>::kExact;
    return floor_div(s.trunc_num(), s.ram());
}

template <class R>
std::string exponent_str(const PuiseuxSeries<R>& s, long e) {
    if (s.ram() == 1 || e % s.ram() == 0) return std::to_string(e / s.ram());
    return std::to_string(e) + "/" + std::to_string(s.ram());
}

void push(VerifyReport& rep, std::string name, bool pass, std::string witness) {
    rep.checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
}

MatrixSeries minus_identity(const MatrixSeries& a, int n) {
    return a - MatrixSeries::constant(UTMatrix(n), UTMatrix::identity(n));
}

long inverse_window(const ModuleData& m) {
    return m.trunc + 2 * (std::labs(m.S.ld_num()) + m.n + 2);
}

// num(S) den(S)^{-1} T^tdeg for a K-element sample.
MatrixSeries sample_operator(const TwistedStructure& ts, const KSample& k) {
    MatrixSeries r = evaluate_rational(ts.base, k.num, k.den);
    if (k.tdeg % 2 != 0) r = r * ts.T;
    return r;
}

} // namespace

VerifyReport check_untwisted(const ModuleData& m,
                             const std::vector<FieldScalar>& sample_alphas) {
    VerifyReport rep;
    rep.caveat = kVerifyCaveat;
    rep.precision_used = known_bound(m.S);

    for (const FieldScalar& a : sample_alphas) {
        MatrixSeries shifted =
            m.S - MatrixSeries::constant(UTMatrix(m.n),
                                         UTMatrix::scalar(m.n, a));
        std::string name = "invertible_s_minus_alpha(" + a.str() + ")";
        try {
            MatrixSeries inv = series_inverse(shifted, inverse_window(m));
            MatrixSeries resid = minus_identity(shifted * inv, m.n);
            push(rep, name, resid.is_zero_window(), resid.str());
        } catch (const NotInvertible& e) {
            push(rep, name, false, e.what());
        }
    }

    {
        bool ok = true;
        std::string witness;
        const auto& coeffs = m.S.stored();
        for (size_t i = 0; i < coeffs.size() && ok; ++i)
            for (size_t j = i + 1; j < coeffs.size() && ok; ++j)
                if (!(coeffs[i] * coeffs[j] == coeffs[j] * coeffs[i])) {
                    ok = false;
                    witness = (coeffs[i] * coeffs[j] - coeffs[j] * coeffs[i]).str();
                }
        push(rep, "coefficient_commutativity", ok, std::move(witness));
    }

    {
        MatrixSeries resid =
            evaluate(m.D.q(), m.S) * m.S.derivative() - evaluate(m.D.p(), m.S);
        push(rep, "ode_residual", resid.is_zero_window(), resid.str());
        rep.precision_used = std::min(rep.precision_used, known_bound(resid));
    }
    return rep;
}

std::string KSample::str() const {
    std::string head = tdeg % 2 != 0 ? "t" : "";
    std::string n = num.str("s");
    std::string d = den.str("s");
    std::string r;
    if (head.empty()) {
        r = n;
    } else if (n == "1") {
        r = head;
    } else {
        r = head + "*(" + n + ")";
    }
    if (d != "1") r += "/(" + d + ")";
    return r;
}

std::vector<KSample> default_twisted_samples(const TwistedStructure& ts) {
    Poly one(1), s = Poly::variable();
    FieldScalar a0;
    for (long c = 0;; ++c) {
        a0 = FieldScalar(c);
        if (!ts.base.D.q().eval(a0).is_zero() && !ts.ext.f().eval(a0).is_zero()) break;
    }
    Poly shifted = s - Poly(a0);
    return {{s, one, 0}, {one, one, 1}, {s, one, 1}, {one, shifted, 0}, {one, shifted, 1}};
}

VerifyReport check_twisted(const TwistedStructure& ts, std::vector<KSample> samples) {
    if (samples.empty()) samples = default_twisted_samples(ts);
    const ModuleData& m = ts.base;
    const Poly& f = ts.ext.f();

    VerifyReport rep;
    rep.caveat = kVerifyCaveat;
    rep.precision_used = std::min(known_bound(m.S), known_bound(ts.T));

    std::vector<MatrixSeries> ops;
    ops.reserve(samples.size());
    for (const auto& k : samples) ops.push_back(sample_operator(ts, k));

    {
        // Bounded-below support holds by construction for stored series; the
        // entry records the observed bound over the samples.
        bool found = false;
        long num = 0;
        int ram = 1;
        std::string bound = "none";
        for (const auto& op : ops)
            if (op.has_support()) {
                long e = op.ld_num();
                if (!found || e * ram < num * op.ram()) {
                    found = true;
                    num = e;
                    ram = op.ram();
                    bound = exponent_str(op, e);
                }
            }
        push(rep, "support_lower_bound(" + bound + ")", true, "");
    }

    {
        MatrixSeries resid = minus_identity(evaluate_rational(m, Poly(1), Poly(1)), m.n);
        push(rep, "vacuum", resid.is_zero_window(), resid.str());
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& sc : m.S.stored())
            for (const auto& tc : ts.T.stored())
                if (!(sc * tc == tc * sc)) {
                    ok = false;
                    witness = (sc * tc - tc * sc).str();
                }
        push(rep, "s_t_commutativity", ok, std::move(witness));
    }

    for (size_t i = 0; i < samples.size(); ++i) {
        for (size_t j = i; j < samples.size(); ++j) {
            KSample prod{samples[i].num * samples[j].num, samples[i].den * samples[j].den,
                         samples[i].tdeg + samples[j].tdeg};
            if (prod.tdeg >= 2) {
                prod.num = prod.num * f;
                prod.tdeg -= 2;
            }
            MatrixSeries resid = sample_operator(ts, prod) - ops[i] * ops[j];
            push(rep,
                 "multiplicativity(" + samples[i].str() + "," + samples[j].str() + ")",
                 resid.is_zero_window(), resid.str());
            rep.precision_used = std::min(rep.precision_used, known_bound(resid));
        }
    }

    {
        MatrixSeries resid = evaluate(m.D.q(), m.S) * m.S.derivative() -
                             evaluate(m.D.p(), m.S);
        push(rep, "derivation_s", resid.is_zero_window(), resid.str());
    }

    {
        // Dt = (p f')/(2 q t): compare dT/dx with (p f')(S) * (2 q(S) T)^{-1}.
        MatrixSeries denom = evaluate(m.D.q(), m.S).scale(FieldScalar(2)) * ts.T;
        try {
            MatrixSeries image =
                evaluate(m.D.p() * f.derivative(), m.S) *
                series_inverse(denom, inverse_window(m) * denom.ram());
            MatrixSeries resid = image - ts.T.derivative();
            push(rep, "derivation_t", resid.is_zero_window(), resid.str());
            rep.precision_used = std::min(rep.precision_used, known_bound(resid));
        } catch (const NotInvertible& e) {
            push(rep, "derivation_t", false, e.what());
        }
    }

    {
        long r = ts.g == GaloisTag::sigma ? 1 : 0;
        bool ok = descent_check(ts.T, r, ts.ram);
        push(rep, "support_coset", ok,
             "exponent support leaves the coset -" + std::to_string(r) + "/" +
                 std::to_string(ts.ram) + " + Z");
    }
    return rep;
}

PolySeries borcherds_adjoint(const Poly& a, const Poly& b, const DerivationSpec& d,
                             long order) {
    if (d.q().degree() > 0)
        throw Error("domain",
                    "the adjoint operator needs q constant so that D preserves "
                    "polynomials");
    if (order < 1) throw Error("domain", "order must be positive");
    FieldScalar qinv = d.q().constant_term().inverse();

    std::vector<Poly> coeffs;
    coeffs.reserve(static_cast<size_t>(order));
    Poly da = a;
    Rat factorial(1);
    for (long i = 0; i < order; ++i) {
        if (i > 0) {
            da = da.derivative() * d.p() * Poly(qinv);
            factorial *= i;
        }
        coeffs.push_back(da * b * Poly(FieldScalar(Rat(1) / factorial)));
    }
    return PolySeries::from_coeffs(Poly(), 1, 0, std::move(coeffs), order);
}

} // namespace vamod
