#pragma once

#include "vamod/rational.hpp"

#include <optional>
#include <string>

namespace vamod {

// Element of Q(i): re + im*i.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_rational() const { return sgn(im) == 0; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const;
    GaussRat inverse() const; // throws Error("division_by_zero") on zero

    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

// Exact square root within Q(i), if the argument is a square there.
std::optional<GaussRat> gauss_sqrt(const GaussRat& z);

enum class TowerLevel { rational, gaussian, extended };

// Element of the scalar tower Q <= Q(i) <= Q(i)(sqrt(rad)). Stored as
// u + v*sqrt(rad) with u, v in Q(i); the representation is eagerly demoted,
// so v != 0 iff the value genuinely needs the adjoined root and im parts are
// zero for honestly rational values. At most one adjunction is ever live in a
// computation; mixing values over different radicands throws TowerExhausted.
// (No cross-radicand normalization such as sqrt(8) = 2*sqrt(2) is attempted.)
class FieldScalar {
public:
    FieldScalar() : u_(), v_() {}
    FieldScalar(long k) : u_(Rat(k)), v_() {}
    FieldScalar(Rat r) : u_(std::move(r)), v_() {}
    FieldScalar(GaussRat g) : u_(std::move(g)), v_() {}

    static FieldScalar i() { return FieldScalar(GaussRat(Rat(0), Rat(1))); }

    // u + v*sqrt(rad); precondition (checked by adjoin_sqrt, asserted here):
    // rad is not a square in Q(i) and is nonzero.
    static FieldScalar radical(GaussRat u, GaussRat v, GaussRat rad);

    TowerLevel level() const {
        if (!v_.is_zero()) return TowerLevel::extended;
        if (!u_.is_rational()) return TowerLevel::gaussian;
        return TowerLevel::rational;
    }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_one() const { return v_.is_zero() && u_.im == 0 && u_.re == 1; }
    bool is_rational() const { return v_.is_zero() && u_.is_rational(); }

    // Value as a plain rational; precondition: is_rational().
    const Rat& rat() const;

    const GaussRat& base_part() const { return u_; }    // u
    const GaussRat& radical_part() const { return v_; } // v
    const GaussRat& radicand() const { return rad_; }   // meaningful iff extended

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    FieldScalar inverse() const; // throws Error("division_by_zero") on zero
    FieldScalar pow(unsigned long e) const;

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    // Text form: "3", "-1/2", "1/2+3/4*i", "(1)+(1/2+1*i)*sqrt(2)".
    std::string str() const;

private:
    GaussRat u_, v_;
    GaussRat rad_;

    // Demote v == 0 to the Gaussian representation (drops rad_).
    void normalize();
    // Radicand both operands agree on; throws TowerExhausted on conflict.
    const GaussRat* joint_radicand(const FieldScalar& o) const;

    friend std::optional<FieldScalar> sqrt_in_field(const FieldScalar&,
                                                    const FieldScalar&);
};

// Square root of w inside the tower spanned by w and `ambient` (Q(i) at
// minimum, so sqrt_in_field(-4) = 2i). `ambient` only contributes its
// radicand; pass FieldScalar() to search w's own tower.
std::optional<FieldScalar> sqrt_in_field(const FieldScalar& w,
                                         const FieldScalar& ambient = FieldScalar());

struct SqrtOutcome {
    FieldScalar root;
    bool extended; // true iff a new radicand was adjoined
};

// Square root of c, adjoining sqrt(c) to the tower when c is not already a
// square in the field spanned by c and `ambient`. Throws TowerExhausted if
// that field already carries an adjoined radicand.
SqrtOutcome adjoin_sqrt(const FieldScalar& c, const FieldScalar& ambient = FieldScalar());

// Representative of the larger of the two towers (for ambient tracking);
// throws TowerExhausted if both are extended with different radicands.
FieldScalar tower_join(const FieldScalar& a, const FieldScalar& b);

} // namespace vamod
