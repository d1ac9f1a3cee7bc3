#pragma once

#include <string>

#include "vamod/lift.hpp"
#include "vamod/modbuild.hpp"

namespace vamod {

// Quadratic extension of the rational function field by a square root t of a
// square-free polynomial f; sigma is the involution t -> -t.
class QuadExt {
public:
    explicit QuadExt(Poly f);

    const Poly& f() const { return f_; }

    // The classical setting assumes deg f >= 3; smaller degrees are accepted
    // because the valuation-parity argument never uses the bound, but the
    // relaxation is surfaced in reports.
    bool degree_relaxed() const { return f_.degree() < 3; }

private:
    Poly f_;
};

enum class GaloisTag { id, sigma };

std::string galois_tag_str(GaloisTag g);

struct TwistReport {
    GaloisTag g = GaloisTag::id;
    long valuation = 0;     // valuation of f(S^{[0]}) as an integer-exponent series
    std::string predicate;  // closed-form criterion that fired
    bool degree_relaxed = false;
};

// Decide id vs sigma by the parity of the valuation of f(S^{[0]}), and check
// the answer against the case-specific closed-form predicate:
// case +1: f(0) = 0;  case 0: f(alpha) = 0;  case -1: deg f odd.
// Throws PredicateMismatch if the two tests ever disagree.
TwistReport twist_classify(const QuadExt& ext, const ModuleData& m);

struct TwistedStructure {
    ModuleData base;
    QuadExt ext;
    GaloisTag g = GaloisTag::id;
    int ram = 1;    // 2 exactly when g = sigma
    MatrixSeries T; // series of the adjoined square root
    TwistReport report;
};

// Solve Z^2 = f(S) by seeding with series_sqrt(f(S^{[0]})) and lifting the
// strictly upper-triangular corrections; the result window is trunc.
TwistedStructure build_twisted_structure(const QuadExt& ext, const ModuleData& m,
                                         long trunc);

// The image of the structure under t -> -t.
TwistedStructure galois_conjugate(const TwistedStructure& ts);

enum class StructureRelation { equal, conjugate, distinct };

std::string structure_relation_str(StructureRelation r);

// Requires the same base module and extension; compares the adjoined-root
// series on the shared window.
StructureRelation structures_equivalent(const TwistedStructure& a,
                                        const TwistedStructure& b);

} // namespace vamod
