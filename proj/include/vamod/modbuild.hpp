#pragma once

#include "vamod/series.hpp"

namespace vamod {

// Derivation (p/q) d/ds of the rational function field; p, q nonzero and
// coprime (enforced).
class DerivationSpec {
public:
    DerivationSpec(Poly p, Poly q);
    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }

private:
    Poly p_, q_;
};

// Level of the semisimple part of S: ld(S^{[0]}) = +1, 0, or -1.
enum class ModuleCase : int { minus_one = -1, zero = 0, one = 1 };

ModuleCase case_from_int(int v);

struct CaseReport {
    DerivationSpec D;
    bool case_one = false;
    FieldScalar alpha_one; // forced: p(0)/q(0)
    bool case_minus_one = false;
    FieldScalar alpha_minus_one; // forced: -lc(q)/lc(p)

    // Case 0 admits any alpha with p(alpha) q(alpha) != 0.
    bool case_zero_admissible(const FieldScalar& alpha) const;
};

CaseReport classify(const DerivationSpec& d);

struct ModuleData {
    int n;
    DerivationSpec D;
    ModuleCase caseL;
    FieldScalar alpha;
    long trunc; // guaranteed integer-exponent window of S
    MatrixSeries S;
};

// Construct the module series S for the requested case. alpha must equal the
// forced value in cases +1/-1 and satisfy the case-0 predicate otherwise.
// trunc >= 2; S is returned with exactly that window in every case.
ModuleData build_module(const DerivationSpec& d, ModuleCase c, const FieldScalar& alpha,
                        int n, long trunc);

// Operator attached to num/den: num(S) * den(S)^{-1}; den must be nonzero.
MatrixSeries evaluate_rational(const ModuleData& m, const Poly& num, const Poly& den);

} // namespace vamod
