#pragma once

#include <string>
#include <vector>

#include "vamod/twist.hpp"

namespace vamod {

struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string witness; // nonzero residual (or failure reason) when pass is false
};

struct VerifyReport {
    std::vector<CheckEntry> checks;
    long precision_used = 0; // x-exponent bound the checks are guaranteed to
    std::string caveat;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Stated on every report: the axioms are checked on generators at finite
// truncation only.
extern const char* const kVerifyCaveat;

// Checks on a bare module: invertibility of S - alpha for each sample,
// pairwise commutativity of the stored coefficients, and the defining ODE
// residual q(S) S' - p(S) = 0.
VerifyReport check_untwisted(const ModuleData& m,
                             const std::vector<FieldScalar>& sample_alphas = {
                                 FieldScalar(0), FieldScalar(1), FieldScalar(-1),
                                 FieldScalar(2)});

// Element (num/den) * t^tdeg of the quadratic extension, acting through
// num(S) den(S)^{-1} T^tdeg.
struct KSample {
    Poly num;
    Poly den;
    int tdeg = 0; // 0 or 1

    std::string str() const;
};

// Default sample set {s, t, s*t, 1/(s-a0), t/(s-a0)} with a0 a small integer
// avoiding the roots of q and f.
std::vector<KSample> default_twisted_samples(const TwistedStructure& ts);

// Generator-level checks on a twisted structure: bounded-below support,
// vacuum, commutativity between S- and T-coefficients, multiplicativity on
// sample pairs (including T^2 = f(S)), derivation compatibility for s and t,
// and the exponent-coset condition.
VerifyReport check_twisted(const TwistedStructure& ts, std::vector<KSample> samples = {});

// The adjoint operator sum_i (D^i a) b x^i / i! for polynomial a, b; requires
// q constant so polynomials stay polynomials under D.
PolySeries borcherds_adjoint(const Poly& a, const Poly& b, const DerivationSpec& d,
                             long order);

} // namespace vamod
