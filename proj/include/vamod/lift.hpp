#pragma once

#include <vector>

#include "vamod/series.hpp"

namespace vamod {

// Root-lifting problem for P(Z) = sum phat[i] Z^i acting on an n-dimensional
// module: t0 is a scalar-series root of the diagonal part of P, and the lift
// fills in the strictly upper-triangular corrections grade by grade.
struct LiftProblem {
    int degree = 0;                 // polynomial degree N
    std::vector<MatrixSeries> phat; // N+1 coefficient series, Z-degree ascending
    ScalarSeries t0;                // semisimple root candidate
    int n = 1;                      // module dimension
    long min_trunc = 1;             // required output window (x-exponent units)

    LiftProblem(int deg, std::vector<MatrixSeries> ph, ScalarSeries seed, int dim,
                long window);
};

// T = sum of superdiagonal components T^(k), k < n, with T^(0) = t0 * I and
// T^(k) = -[(dP/dZ at T^(0), diagonal part)]^{-1} * (grade-k part of the
// residual P(T^(0) + ... + T^(k-1))).  The result satisfies P(T) = 0 to the
// guaranteed window.
//
// Throws Error("lift") if t0 fails to kill the diagonal residual,
// NotSeparable if the diagonal derivative series is not invertible, and
// PrecisionExhausted if the inputs cannot certify min_trunc.
MatrixSeries lift_root(const LiftProblem& prob);

// True iff t_other has diagonal part t0 * I and equals lift_root(prob) on
// the shared window.
bool uniqueness_probe(const LiftProblem& prob, const MatrixSeries& t_other);

// True iff every exponent of b lies in -i/p + Z.
template <class R>
bool descent_check(const PuiseuxSeries<R>& b, long i, long p) {
    return supported_on_coset(b, i, p);
}

// True iff dtheta_image = dT/dx on the shared window.
bool derivation_compat_check(const MatrixSeries& dtheta_image, const MatrixSeries& t);

} // namespace vamod
