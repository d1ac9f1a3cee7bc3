#pragma once

#include "vamod/scalar.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace vamod {

// Dense univariate polynomial over the scalar tower. Normalized: no trailing
// zero coefficients; the zero polynomial has an empty coefficient vector and
// degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(const FieldScalar& c) { if (!c.is_zero()) c_ = {c}; }
    Poly(long k) : Poly(FieldScalar(k)) {}
    Poly(std::initializer_list<FieldScalar> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<FieldScalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly variable() { return Poly({FieldScalar(0), FieldScalar(1)}); }
    static Poly monomial(size_t deg, const FieldScalar& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of s^k (zero beyond the degree).
    const FieldScalar& coeff(size_t k) const;
    const FieldScalar& leading() const;
    const FieldScalar& constant_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldScalar& c) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const;
    FieldScalar eval(const FieldScalar& x) const;
    Poly monic() const; // precondition: nonzero

    // p(g) by Horner; used with linear g for argument shifts.
    Poly compose(const Poly& g) const;

    struct DivMod;
    DivMod divmod(const Poly& d) const; // throws Error("division_by_zero") if d == 0

    // Text form, highest degree first: "3*s^2-1/2*s+4".
    std::string str(const std::string& var = "s") const;

private:
    std::vector<FieldScalar> c_;
    void normalize();
};

struct Poly::DivMod {
    Poly quot, rem;
};

// Monic gcd by the Euclidean algorithm; gcd(0, 0) is rejected.
Poly poly_gcd(const Poly& a, const Poly& b);

// True iff gcd(f, f') is constant; constants count as square-free.
bool is_squarefree(const Poly& f);

} // namespace vamod
