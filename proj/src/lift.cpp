#include "vamod/lift.hpp"

#include <cstdlib>

#include "vamod/errors.hpp"

namespace vamod {

namespace {

MatrixSeries horner_at(const std::vector<MatrixSeries>& coeffs, const MatrixSeries& z,
                       int n) {
    MatrixSeries acc{UTMatrix(n)};
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

} // namespace

LiftProblem::LiftProblem(int deg, std::vector<MatrixSeries> ph, ScalarSeries seed,
                         int dim, long window)
    : degree(deg), phat(std::move(ph)), t0(std::move(seed)), n(dim), min_trunc(window) {
    if (degree < 1) throw Error("domain", "polynomial degree must be at least 1");
    if (phat.size() != static_cast<size_t>(degree) + 1)
        throw Error("domain", "coefficient count does not match the polynomial degree");
    if (phat[degree].is_zero_window() && !phat[degree].is_exact())
        throw Error("domain", "leading coefficient vanishes on its window");
    for (const auto& c : phat)
        for (const auto& m : c.stored())
            if (m.dim() != n) throw DimensionError("coefficient dimension mismatch");
    if (min_trunc < 1) throw Error("domain", "output window must be positive");
}

MatrixSeries lift_root(const LiftProblem& prob) {
    const int n = prob.n;
    MatrixSeries t = embed_scalar_series(prob.t0, n);

    if (!diag_part_series(horner_at(prob.phat, t, n)).is_zero_window())
        throw Error("lift", "seed is not a root of the diagonal polynomial");

    std::vector<MatrixSeries> dcoeffs;
    dcoeffs.reserve(prob.degree);
    for (int i = 1; i <= prob.degree; ++i)
        dcoeffs.push_back(prob.phat[i].scale(FieldScalar(static_cast<long>(i))));
    MatrixSeries dfull = horner_at(dcoeffs, t, n);
    MatrixSeries d0 = diag_part_series(dfull);
    if (d0.is_zero_window())
        throw NotSeparable("derivative at the seed vanishes on its window");
    long inv_window =
        prob.min_trunc * static_cast<long>(d0.ram()) + 2 * n + 4 + 2 * std::labs(d0.ld_num());
    MatrixSeries invd{UTMatrix(n)};
    try {
        invd = series_inverse(d0, inv_window);
    } catch (const NotInvertible& e) {
        throw NotSeparable(std::string("derivative at the seed is not invertible: ") +
                           e.what());
    }

    for (int k = 1; k < n; ++k) {
        MatrixSeries ek = superdiag_series(horner_at(prob.phat, t, n), k);
        t = t - invd * ek;
    }

    if (!t.is_exact() && t.trunc_num() < prob.min_trunc * static_cast<long>(t.ram()))
        throw PrecisionExhausted("lift inputs certify the result only below x^" +
                                 std::to_string(prob.min_trunc));
    return t;
}

bool uniqueness_probe(const LiftProblem& prob, const MatrixSeries& t_other) {
    if (!agree(diag_part_series(t_other), embed_scalar_series(prob.t0, prob.n)))
        return false;
    return agree(lift_root(prob), t_other);
}

bool derivation_compat_check(const MatrixSeries& dtheta_image, const MatrixSeries& t) {
    return agree(dtheta_image, t.derivative());
}

} // namespace vamod
