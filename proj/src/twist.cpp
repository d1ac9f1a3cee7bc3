#include "vamod/twist.hpp"

#include "vamod/errors.hpp"

namespace vamod {

QuadExt::QuadExt(Poly f) : f_(std::move(f)) {
    if (f_.degree() < 1)
        throw Error("domain", "the extension polynomial must be nonconstant");
    if (!is_squarefree(f_))
        throw Error("domain", "the extension polynomial must be square-free");
}

std::string galois_tag_str(GaloisTag g) { return g == GaloisTag::id ? "id" : "sigma"; }

TwistReport twist_classify(const QuadExt& ext, const ModuleData& m) {
    ScalarSeries f0 = evaluate(ext.f(), semisimple_scalar_series(m.S));
    if (!f0.has_support())
        throw PrecisionExhausted(
            "f(S^{[0]}) vanishes on the known window; rebuild the module with a "
            "larger truncation");

    TwistReport rep;
    rep.valuation = f0.ld_num();
    rep.g = rep.valuation % 2 != 0 ? GaloisTag::sigma : GaloisTag::id;
    rep.degree_relaxed = ext.degree_relaxed();

    bool predicted_sigma = false;
    switch (m.caseL) {
    case ModuleCase::one:
        predicted_sigma = ext.f().constant_term().is_zero();
        rep.predicate = predicted_sigma ? "f0_zero" : "f0_nonzero";
        break;
    case ModuleCase::zero:
        predicted_sigma = ext.f().eval(m.alpha).is_zero();
        rep.predicate = predicted_sigma ? "f_at_alpha_zero" : "f_at_alpha_nonzero";
        break;
    case ModuleCase::minus_one:
        predicted_sigma = ext.f().degree() % 2 != 0;
        rep.predicate = predicted_sigma ? "deg_f_odd" : "deg_f_even";
        break;
    }
    if (predicted_sigma != (rep.g == GaloisTag::sigma))
        throw PredicateMismatch("valuation parity " + std::to_string(rep.valuation) +
                                " contradicts predicate " + rep.predicate);
    return rep;
}

TwistedStructure build_twisted_structure(const QuadExt& ext, const ModuleData& m,
                                         long trunc) {
    if (trunc < 1) throw Error("domain", "structure truncation must be positive");
    TwistReport rep = twist_classify(ext, m);

    MatrixSeries fS = evaluate(ext.f(), m.S);
    ScalarSeries f0 = evaluate(ext.f(), semisimple_scalar_series(m.S));
    SqrtResult seed = series_sqrt(f0, trunc + 2 * (m.n + 2));
    if (seed.ramified != (rep.g == GaloisTag::sigma))
        throw PredicateMismatch("square-root ramification contradicts the classification");

    const int n = m.n;
    MatrixSeries zero_c{UTMatrix(n)};
    MatrixSeries one_c = MatrixSeries::constant(UTMatrix(n), UTMatrix::identity(n));
    LiftProblem pr(2, {fS.scale(FieldScalar(-1)), zero_c, one_c}, seed.root, n, trunc);
    MatrixSeries T = lift_root(pr).truncate_to(trunc * (seed.ramified ? 2 : 1));

    return TwistedStructure{m, ext, rep.g, seed.ramified ? 2 : 1, T, rep};
}

TwistedStructure galois_conjugate(const TwistedStructure& ts) {
    TwistedStructure r = ts;
    r.T = ts.T.scale(FieldScalar(-1));
    return r;
}

std::string structure_relation_str(StructureRelation r) {
    switch (r) {
    case StructureRelation::equal: return "equal";
    case StructureRelation::conjugate: return "conjugate";
    default: return "distinct";
    }
}

StructureRelation structures_equivalent(const TwistedStructure& a,
                                        const TwistedStructure& b) {
    if (a.base.n != b.base.n || !(a.base.D.p() == b.base.D.p()) ||
        !(a.base.D.q() == b.base.D.q()) || a.base.caseL != b.base.caseL ||
        !(a.base.alpha == b.base.alpha) || !(a.ext.f() == b.ext.f()))
        throw Error("domain", "structures live over different bases");
    if (agree(a.T, b.T)) return StructureRelation::equal;
    if (agree(a.T, b.T.scale(FieldScalar(-1)))) return StructureRelation::conjugate;
    return StructureRelation::distinct;
}

} // namespace vamod
