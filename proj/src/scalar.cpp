#include "vamod/scalar.hpp"

#include "vamod/errors.hpp"

namespace vamod {

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

namespace {

std::string gauss_str(const GaussRat& g) {
    if (sgn(g.im) == 0) return rat_str(g.re);
    std::string imag = rat_str(g.im) + "*i";
    if (sgn(g.re) == 0) return imag;
    if (sgn(g.im) > 0) return rat_str(g.re) + "+" + imag;
    return rat_str(g.re) + imag; // im < 0 prints its own sign
}

} // namespace

GaussRat GaussRat::operator*(const GaussRat& o) const {
    if (sgn(im) == 0 && sgn(o.im) == 0) return {re * o.re, Rat(0)};
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw Error("division_by_zero", "inverse of zero");
    if (sgn(im) == 0) return {Rat(1) / re, Rat(0)};
    Rat n = norm();
    return {re / n, -im / n};
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
    // (u + v*i)^2 = (u^2 - v^2) + 2uv*i; with N = u^2 + v^2 = sqrt(re^2 + im^2),
    // u^2 = (re + N)/2 and v = im/(2u).
    if (sgn(z.im) == 0) {
        if (auto u = rational_sqrt(z.re)) return GaussRat(*u);
        if (auto v = rational_sqrt(-z.re)) return GaussRat(Rat(0), *v);
        return std::nullopt;
    }
    auto n = rational_sqrt(z.norm());
    if (!n) return std::nullopt;
    auto u = rational_sqrt((z.re + *n) / 2);
    if (!u || sgn(*u) == 0) return std::nullopt;
    Rat v = z.im / (2 * *u);
    return GaussRat(*u, v);
}

void FieldScalar::normalize() {
    if (v_.is_zero()) rad_ = GaussRat();
}

FieldScalar FieldScalar::radical(GaussRat u, GaussRat v, GaussRat rad) {
    if (rad.is_zero()) throw Error("domain", "radicand must be nonzero");
    if (gauss_sqrt(rad)) throw Error("domain", "radicand is already a square");
    FieldScalar r;
    r.u_ = std::move(u);
    r.v_ = std::move(v);
    r.rad_ = std::move(rad);
    r.normalize();
    return r;
}

const Rat& FieldScalar::rat() const {
    if (!is_rational()) throw Error("domain", "scalar is not rational: " + str());
    return u_.re;
}

const GaussRat* FieldScalar::joint_radicand(const FieldScalar& o) const {
    bool a = !v_.is_zero(), b = !o.v_.is_zero();
    if (a && b) {
        if (rad_ != o.rad_)
            throw TowerExhausted("mixing values over sqrt(" + gauss_str(rad_) +
                                 ") and sqrt(" + gauss_str(o.rad_) + ")");
        return &rad_;
    }
    if (a) return &rad_;
    if (b) return &o.rad_;
    return nullptr;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r = *this;
    r.u_ = -r.u_;
    r.v_ = -r.v_;
    return r;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    const GaussRat* k = joint_radicand(o);
    FieldScalar r;
    r.u_ = u_ + o.u_;
    r.v_ = v_ + o.v_;
    if (k) r.rad_ = *k;
    r.normalize();
    return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    const GaussRat* k = joint_radicand(o);
    FieldScalar r;
    r.u_ = u_ - o.u_;
    r.v_ = v_ - o.v_;
    if (k) r.rad_ = *k;
    r.normalize();
    return r;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    const GaussRat* k = joint_radicand(o);
    FieldScalar r;
    if (!k) {
        r.u_ = u_ * o.u_;
        return r;
    }
    r.u_ = u_ * o.u_ + (v_ * o.v_) * *k;
    r.v_ = u_ * o.v_ + v_ * o.u_;
    r.rad_ = *k;
    r.normalize();
    return r;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw Error("division_by_zero", "inverse of zero");
    if (v_.is_zero()) return FieldScalar(u_.inverse());
    // (u + v*sqrt(k))^{-1} = (u - v*sqrt(k)) / (u^2 - v^2 k); the denominator
    // is nonzero because k is not a square in Q(i).
    GaussRat d = u_ * u_ - (v_ * v_) * rad_;
    GaussRat di = d.inverse();
    FieldScalar r;
    r.u_ = u_ * di;
    r.v_ = -(v_ * di);
    r.rad_ = rad_;
    r.normalize();
    return r;
}

FieldScalar FieldScalar::pow(unsigned long e) const {
    FieldScalar acc(1);
    FieldScalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (v_.is_zero() != o.v_.is_zero()) return false;
    if (!v_.is_zero() && rad_ != o.rad_) return false;
    return u_ == o.u_ && v_ == o.v_;
}

std::string FieldScalar::str() const {
    if (v_.is_zero()) return gauss_str(u_);
    return "(" + gauss_str(u_) + ")+(" + gauss_str(v_) + ")*sqrt(" + gauss_str(rad_) + ")";
}

FieldScalar tower_join(const FieldScalar& a, const FieldScalar& b) {
    bool ae = a.level() == TowerLevel::extended;
    bool be = b.level() == TowerLevel::extended;
    if (ae && be) {
        if (a.radicand() != b.radicand())
            throw TowerExhausted("values live over different adjoined radicands");
        return a;
    }
    if (ae) return a;
    if (be) return b;
    return a.level() >= b.level() ? a : b;
}

std::optional<FieldScalar> sqrt_in_field(const FieldScalar& w, const FieldScalar& ambient) {
    FieldScalar scope = tower_join(w, ambient);
    if (scope.level() != TowerLevel::extended) {
        if (auto r = gauss_sqrt(w.u_)) return FieldScalar(*r);
        return std::nullopt;
    }
    const GaussRat& k = scope.radicand();
    const GaussRat& U = w.u_;
    const GaussRat& V = w.v_;
    if (V.is_zero()) {
        if (auto r = gauss_sqrt(U)) return FieldScalar(*r);
        // U = (v*sqrt(k))^2 = v^2 k
        if (auto v = gauss_sqrt(U * k.inverse()))
            return FieldScalar::radical(GaussRat(), *v, k);
        return std::nullopt;
    }
    // (u + v*sqrt(k))^2 = (u^2 + v^2 k) + 2uv*sqrt(k); with d^2 = U^2 - V^2 k,
    // u^2 = (U + d)/2 or (U - d)/2, then v = V/(2u).
    auto d = gauss_sqrt(U * U - (V * V) * k);
    if (!d) return std::nullopt;
    for (GaussRat t : {(U + *d) * Rat(1, 2), (U - *d) * Rat(1, 2)}) {
        auto u = gauss_sqrt(t);
        if (!u || u->is_zero()) continue;
        GaussRat v = V * (GaussRat(Rat(2)) * *u).inverse();
        if (*u * *u + (v * v) * k == U && GaussRat(Rat(2)) * *u * v == V)
            return FieldScalar::radical(*u, v, k);
    }
    return std::nullopt;
}

SqrtOutcome adjoin_sqrt(const FieldScalar& c, const FieldScalar& ambient) {
    if (c.is_zero()) throw Error("domain", "sqrt of zero requested");
    if (auto r = sqrt_in_field(c, ambient)) return {*r, false};
    FieldScalar scope = tower_join(c, ambient);
    if (scope.level() == TowerLevel::extended)
        throw TowerExhausted("sqrt(" + c.str() + ") needs a second adjunction");
    return {FieldScalar::radical(GaussRat(), GaussRat(Rat(1)), c.base_part()), true};
}

} // namespace vamod
