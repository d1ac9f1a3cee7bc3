#include "vamod/series.hpp"

namespace vamod {

namespace {

// Number of known coefficient slots to work with; `window` is only consulted
// for exact inputs (whose inverse/root is generally infinite).
template <class R>
long resolve_window(const PuiseuxSeries<R>& a, long window, const char* what) {
    if (a.is_exact()) {
        if (window <= 0)
            throw PrecisionExhausted(std::string(what) +
                                     " of an exact series needs an explicit window");
        return window;
    }
    return a.trunc_num() - a.ld_num();
}

// b_0 = lc^{-1}, b_m = -lc^{-1} sum_{j=1}^{m} a_j b_{m-j}; output spans
// [-lo, -lo + W), i.e. trunc - 2*lo for truncated input.
template <class R>
PuiseuxSeries<R> classic_inverse(const PuiseuxSeries<R>& a, long w, const R& lcinv) {
    using Ring = series_ring<R>;
    const long lo = a.ld_num();
    std::vector<R> av;
    av.reserve(w);
    for (long k = 0; k < w; ++k) av.push_back(a.coeff(lo + k));
    std::vector<R> b(static_cast<size_t>(w), Ring::zero_like(a.proto()));
    b[0] = lcinv;
    for (long m = 1; m < w; ++m) {
        R acc = Ring::zero_like(a.proto());
        for (long j = 1; j <= m; ++j)
            acc = Ring::add(acc, Ring::mul(av[static_cast<size_t>(j)],
                                           b[static_cast<size_t>(m - j)]));
        b[static_cast<size_t>(m)] = Ring::neg(Ring::mul(lcinv, acc));
    }
    return PuiseuxSeries<R>::from_coeffs(a.proto(), a.ram(), -lo, std::move(b), -lo + w);
}

MatrixSeries embed_entry_series(const ScalarSeries& a, int n, int i) {
    std::vector<UTMatrix> coeffs;
    coeffs.reserve(a.stored().size());
    for (const auto& c : a.stored()) {
        UTMatrix m(n);
        m.set(i, i, c);
        coeffs.push_back(m);
    }
    long lo = a.has_support() ? a.ld_num() : a.trunc_num();
    return MatrixSeries::from_coeffs(UTMatrix(n), a.ram(), lo, std::move(coeffs),
                                     a.trunc_num());
}

} // namespace

ScalarSeries series_inverse(const ScalarSeries& a, long window) {
    if (!a.has_support())
        throw NotInvertible("series is zero within its known window", "0");
    long w = resolve_window(a, window, "inverse");
    return classic_inverse(a, w, a.lc().inverse());
}

MatrixSeries series_inverse(const MatrixSeries& a, long window) {
    const int n = a.proto().dim();
    if (!a.has_support())
        throw NotInvertible("series is zero within its known window", UTMatrix(n).str());
    const UTMatrix& lead = a.lc();

    bool lead_diag_invertible = true;
    for (int i = 0; i < n; ++i)
        if (lead.at(i, i).is_zero()) { lead_diag_invertible = false; break; }
    if (lead_diag_invertible) {
        long w = resolve_window(a, window, "inverse");
        return classic_inverse(a, w, lead.inverse());
    }

    // Semisimple route: A = D + N with D the diagonal part; invertible iff
    // every diagonal entry series is nonzero in the window, and then
    // A^{-1} = (sum_{k<n} (-D^{-1}N)^k) D^{-1} with finitely many terms
    // because D^{-1}N takes strictly upper-triangular values.
    MatrixSeries dinv((UTMatrix(n)));
    for (int i = 0; i < n; ++i) {
        ScalarSeries di = entry_series(a, i, i);
        if (!di.has_support())
            throw NotInvertible("diagonal entry " + std::to_string(i) +
                                " vanishes within the known window",
                                lead.str());
        dinv = dinv + embed_entry_series(series_inverse(di, window), n, i);
    }
    MatrixSeries nil = a - diag_part_series(a);
    MatrixSeries m = dinv * nil;
    MatrixSeries acc = MatrixSeries::constant(UTMatrix(n), UTMatrix::identity(n));
    MatrixSeries pw = acc;
    MatrixSeries neg_m = -m;
    for (int k = 1; k < n; ++k) {
        pw = pw * neg_m;
        acc = acc + pw;
    }
    return acc * dinv;
}

SqrtResult series_sqrt(const ScalarSeries& a, long window) {
    if (!a.has_support())
        throw Error("domain", "sqrt of a series that is zero within its window");
    long w = resolve_window(a, window, "sqrt");
    const long lo = a.ld_num();
    const bool ramified = (lo % 2) != 0;
    if (ramified && a.ram() != 1)
        throw RamificationCap("sqrt of odd leading exponent at ramification 2");

    FieldScalar ambient;
    for (const auto& c : a.stored()) ambient = tower_join(ambient, c);
    SqrtOutcome lead = adjoin_sqrt(a.lc(), ambient);

    // A = lc x^{lo} (1 + u); (1 + u)^{1/2} by the quadratic recurrence.
    const FieldScalar lcinv = a.lc().inverse();
    const FieldScalar half{Rat(1, 2)};
    std::vector<FieldScalar> b(static_cast<size_t>(w));
    b[0] = FieldScalar(1);
    for (long m = 1; m < w; ++m) {
        FieldScalar acc = a.coeff(lo + m) * lcinv;
        for (long j = 1; j < m; ++j)
            acc -= b[static_cast<size_t>(j)] * b[static_cast<size_t>(m - j)];
        b[static_cast<size_t>(m)] = acc * half;
    }
    for (auto& c : b) c = c * lead.root;

    if (!ramified) {
        return {ScalarSeries::from_coeffs(FieldScalar(), a.ram(), lo / 2, std::move(b),
                                          lo / 2 + w),
                false};
    }
    std::vector<FieldScalar> spread(static_cast<size_t>(2 * (w - 1) + 1));
    for (long k = 0; k < w; ++k) spread[static_cast<size_t>(2 * k)] = b[static_cast<size_t>(k)];
    return {ScalarSeries::from_coeffs(FieldScalar(), 2, lo, std::move(spread), lo + 2 * w),
            true};
}

MatrixSeries superdiag_series(const MatrixSeries& a, int k) {
    std::vector<UTMatrix> coeffs;
    coeffs.reserve(a.stored().size());
    for (const auto& c : a.stored()) coeffs.push_back(c.superdiagonal(k));
    long lo = a.has_support() ? a.ld_num() : a.trunc_num();
    return MatrixSeries::from_coeffs(a.proto(), a.ram(), lo, std::move(coeffs), a.trunc_num());
}

MatrixSeries diag_part_series(const MatrixSeries& a) {
    return superdiag_series(a, 0);
}

ScalarSeries entry_series(const MatrixSeries& a, int i, int j) {
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(a.stored().size());
    for (const auto& c : a.stored()) coeffs.push_back(c.at(i, j));
    long lo = a.has_support() ? a.ld_num() : a.trunc_num();
    return ScalarSeries::from_coeffs(FieldScalar(), a.ram(), lo, std::move(coeffs),
                                     a.trunc_num());
}

ScalarSeries semisimple_scalar_series(const MatrixSeries& a) {
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(a.stored().size());
    for (const auto& c : a.stored()) {
        if (!c.diagonal_is_scalar())
            throw Error("not_scalar_diagonal",
                        "matrix series coefficient has unequal diagonal entries");
        coeffs.push_back(c.diagonal_value());
    }
    long lo = a.has_support() ? a.ld_num() : a.trunc_num();
    return ScalarSeries::from_coeffs(FieldScalar(), a.ram(), lo, std::move(coeffs),
                                     a.trunc_num());
}

MatrixSeries embed_scalar_series(const ScalarSeries& a, int n) {
    std::vector<UTMatrix> coeffs;
    coeffs.reserve(a.stored().size());
    for (const auto& c : a.stored()) coeffs.push_back(UTMatrix::scalar(n, c));
    long lo = a.has_support() ? a.ld_num() : a.trunc_num();
    return MatrixSeries::from_coeffs(UTMatrix(n), a.ram(), lo, std::move(coeffs),
                                     a.trunc_num());
}

} // namespace vamod
