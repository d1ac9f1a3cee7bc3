#include "vamod/poly.hpp"

#include "vamod/errors.hpp"

namespace vamod {

namespace {
const FieldScalar kZero;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(size_t deg, const FieldScalar& c) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, FieldScalar());
    p.c_[deg] = c;
    return p;
}

const FieldScalar& Poly::coeff(size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const FieldScalar& Poly::leading() const {
    if (c_.empty()) throw Error("domain", "leading coefficient of zero polynomial");
    return c_.back();
}

const FieldScalar& Poly::constant_term() const {
    return c_.empty() ? kZero : c_[0];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) + o.coeff(k);
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) - o.coeff(k);
    r.normalize();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldScalar());
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b)
            r.c_[a + b] += c_[a] * o.c_[b];
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(const FieldScalar& c) const {
    if (c.is_zero()) return {};
    Poly r = *this;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * FieldScalar(static_cast<long>(k));
    r.normalize();
    return r;
}

FieldScalar Poly::eval(const FieldScalar& x) const {
    FieldScalar acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error("domain", "monic of zero polynomial");
    return *this * leading().inverse();
}

Poly Poly::compose(const Poly& g) const {
    Poly acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * g + Poly(c_[k]);
    return acc;
}

Poly::DivMod Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("division_by_zero", "polynomial division by zero");
    DivMod out;
    out.rem = *this;
    if (degree() < d.degree()) return out;
    FieldScalar lcinv = d.leading().inverse();
    std::vector<FieldScalar> q(degree() - d.degree() + 1, FieldScalar());
    while (!out.rem.is_zero() && out.rem.degree() >= d.degree()) {
        size_t shift = out.rem.degree() - d.degree();
        FieldScalar f = out.rem.leading() * lcinv;
        q[shift] = f;
        out.rem = out.rem - Poly::monomial(shift, f) * d;
    }
    out.quot = Poly(std::move(q));
    return out;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        const FieldScalar& c = c_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool wrap = c.level() != TowerLevel::rational;
        std::string term;
        if (k == 0) {
            term = wrap ? "(" + cs + ")" : cs;
        } else {
            std::string power = (k == 1) ? var : var + "^" + std::to_string(k);
            if (c.is_one())
                term = power;
            else if (!wrap && c == FieldScalar(-1))
                term = "-" + power;
            else
                term = (wrap ? "(" + cs + ")" : cs) + "*" + power;
        }
        if (out.empty()) {
            out = term;
        } else {
            out += (term[0] == '-') ? term : "+" + term;
        }
    }
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw Error("domain", "gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).rem;
        x = y;
        y = r;
    }
    return x.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    return poly_gcd(f, f.derivative()).is_constant();
}

} // namespace vamod
