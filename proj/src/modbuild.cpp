#include "vamod/modbuild.hpp"

#include <cstdlib>

#include "vamod/errors.hpp"

namespace vamod {

DerivationSpec::DerivationSpec(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.is_zero() || q_.is_zero())
        throw Error("domain", "derivation requires nonzero numerator and denominator");
    if (!poly_gcd(p_, q_).is_constant())
        throw Error("domain", "derivation numerator and denominator must be coprime");
}

ModuleCase case_from_int(int v) {
    switch (v) {
        case -1: return ModuleCase::minus_one;
        case 0: return ModuleCase::zero;
        case 1: return ModuleCase::one;
    }
    throw Error("domain", "case must be one of -1, 0, 1");
}

bool CaseReport::case_zero_admissible(const FieldScalar& alpha) const {
    return !D.p().eval(alpha).is_zero() && !D.q().eval(alpha).is_zero();
}

CaseReport classify(const DerivationSpec& d) {
    CaseReport r{d};
    const FieldScalar p0 = d.p().constant_term();
    const FieldScalar q0 = d.q().constant_term();
    if (!p0.is_zero() && !q0.is_zero()) {
        r.case_one = true;
        r.alpha_one = p0 / q0;
    }
    if (d.p().degree() == d.q().degree() + 2) {
        r.case_minus_one = true;
        r.alpha_minus_one = -(d.q().leading() / d.p().leading());
    }
    return r;
}

namespace {

// Coefficients S_(0..w-1) of the solution of q(S) S' = p(S), S_(0) = J_n,
// for a derivation admissible at case +1 (p(0) q(0) != 0). Power tables
// pw[i][j] = [x^j] S^i are extended one column per step, so step m costs
// O(deg * m) matrix products:
//   m S_(m) q(S_(0)) = [x^{m-1}] p(S_{<m})
//                      - sum_{a=1}^{m-1} [x^a] q(S_{<m}) * (m-a) S_(m-a).
std::vector<UTMatrix> solve_case_one(const Poly& p, const Poly& q, int n, long w) {
    const UTMatrix jn = UTMatrix::jordan(n);
    const UTMatrix qj_inv = evaluate(q, jn).inverse();
    const int dmax = std::max(p.degree(), q.degree());

    std::vector<UTMatrix> s;
    s.reserve(static_cast<size_t>(w));
    s.push_back(jn);

    // pw[i][j]; pw[0] is the constant series 1.
    std::vector<std::vector<UTMatrix>> pw(static_cast<size_t>(dmax) + 1);
    pw[0].push_back(UTMatrix::identity(n));
    for (long j = 1; j < w; ++j) pw[0].push_back(UTMatrix(n));

    std::vector<UTMatrix> qs; // [x^j] q(S), filled alongside pw
    qs.reserve(static_cast<size_t>(w));

    for (long m = 1; m < w; ++m) {
        // Extend the tables to column m-1 (they depend on S_(0..m-1) only).
        for (int i = 1; i <= dmax; ++i) {
            UTMatrix acc(n);
            for (long b = 0; b <= m - 1 && b < static_cast<long>(s.size()); ++b)
                acc += pw[static_cast<size_t>(i - 1)][static_cast<size_t>(m - 1 - b)] *
                       s[static_cast<size_t>(b)];
            pw[static_cast<size_t>(i)].push_back(acc);
        }
        {
            UTMatrix acc(n);
            for (int i = 0; i <= q.degree(); ++i)
                if (!q.coeff(i).is_zero())
                    acc += pw[static_cast<size_t>(i)][static_cast<size_t>(m - 1)] * q.coeff(i);
            qs.push_back(acc); // qs[m-1]
        }
        UTMatrix rhs(n);
        for (int i = 0; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero())
                rhs += pw[static_cast<size_t>(i)][static_cast<size_t>(m - 1)] * p.coeff(i);
        for (long a = 1; a <= m - 1; ++a)
            rhs = rhs - qs[static_cast<size_t>(a)] * s[static_cast<size_t>(m - a)] *
                            FieldScalar(m - a);
        s.push_back(rhs * qj_inv * FieldScalar(Rat(1, m)));
    }
    return s;
}

MatrixSeries case_one_series(const Poly& p, const Poly& q, int n, long w) {
    return MatrixSeries::from_coeffs(UTMatrix(n), 1, 0, solve_case_one(p, q, n, w), w);
}

} // namespace

ModuleData build_module(const DerivationSpec& d, ModuleCase c, const FieldScalar& alpha,
                        int n, long trunc) {
    if (trunc < 2) throw Error("domain", "trunc must be at least 2");
    if (n < 1 || n > UTMatrix::kMaxDim)
        throw DimensionError("module dimension outside [1, " +
                             std::to_string(UTMatrix::kMaxDim) + "]");
    const CaseReport rep = classify(d);

    MatrixSeries s((UTMatrix(n)));
    switch (c) {
        case ModuleCase::one: {
            if (!rep.case_one)
                throw Inadmissible("case 1 needs p(0) and q(0) nonzero");
            if (alpha != rep.alpha_one)
                throw Inadmissible("case 1 forces alpha = p(0)/q(0) = " +
                                   rep.alpha_one.str());
            s = case_one_series(d.p(), d.q(), n, trunc);
            break;
        }
        case ModuleCase::zero: {
            if (!rep.case_zero_admissible(alpha))
                throw Inadmissible("case 0 needs p(alpha) and q(alpha) nonzero");
            const Poly shift({alpha, FieldScalar(1)}); // s + alpha
            MatrixSeries base =
                case_one_series(d.p().compose(shift), d.q().compose(shift), n, trunc);
            s = base + MatrixSeries::constant(UTMatrix(n), UTMatrix::scalar(n, alpha));
            break;
        }
        case ModuleCase::minus_one: {
            if (!rep.case_minus_one)
                throw Inadmissible("case -1 needs deg p = deg q + 2");
            if (alpha != rep.alpha_minus_one)
                throw Inadmissible("case -1 forces alpha = -lc(q)/lc(p) = " +
                                   rep.alpha_minus_one.str());
            // Coordinate inversion s -> 1/s turns (p/q) d/ds into
            // (-rev(p)/rev(q)) d/ds exactly when deg p = deg q + 2.
            const int np = d.p().degree(), nq = d.q().degree();
            std::vector<FieldScalar> nc(static_cast<size_t>(np) + 1);
            for (int i = 0; i <= np; ++i) nc[static_cast<size_t>(np - i)] = -d.p().coeff(i);
            std::vector<FieldScalar> dc(static_cast<size_t>(nq) + 1);
            for (int i = 0; i <= nq; ++i) dc[static_cast<size_t>(nq - i)] = d.q().coeff(i);
            Poly num(std::move(nc)), den(std::move(dc));
            const Poly g = poly_gcd(num, den);
            if (!g.is_constant()) {
                num = num.divmod(g).quot;
                den = den.divmod(g).quot;
            }
            MatrixSeries base = case_one_series(num, den, n, trunc + n + 2);
            s = series_inverse(base);
            if (s.trunc_num() < trunc)
                throw PrecisionExhausted("case -1 inversion lost more precision than budgeted");
            s = s.truncate_to(trunc);
            break;
        }
    }
    return ModuleData{n, d, c, alpha, trunc, std::move(s)};
}

MatrixSeries evaluate_rational(const ModuleData& m, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error("domain", "denominator is the zero polynomial");
    MatrixSeries dn = evaluate(den, m.S);
    long window = m.trunc + 2 * (std::labs(m.S.ld_num()) + m.n + 2);
    return evaluate(num, m.S) * series_inverse(dn, window);
}

} // namespace vamod
