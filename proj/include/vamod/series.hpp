#pragma once

#include "vamod/errors.hpp"
#include "vamod/poly.hpp"
#include "vamod/scalar.hpp"
#include "vamod/utmatrix.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace vamod {

// Coefficient-ring shim used by PuiseuxSeries. A specialization exists for
// each coefficient type; `proto` arguments carry the shape (matrix dimension)
// where the type alone does not.
template <class R> struct series_ring;

template <> struct series_ring<FieldScalar> {
    static FieldScalar zero_like(const FieldScalar&) { return {}; }
    static bool is_zero(const FieldScalar& x) { return x.is_zero(); }
    static FieldScalar neg(const FieldScalar& x) { return -x; }
    static FieldScalar add(const FieldScalar& a, const FieldScalar& b) { return a + b; }
    static FieldScalar sub(const FieldScalar& a, const FieldScalar& b) { return a - b; }
    static FieldScalar mul(const FieldScalar& a, const FieldScalar& b) { return a * b; }
    static FieldScalar scale(const FieldScalar& a, const FieldScalar& c) { return a * c; }
    static FieldScalar embed(const FieldScalar&, const FieldScalar& c) { return c; }
    static void check_shape(const FieldScalar&, const FieldScalar&) {}
    static std::string str(const FieldScalar& x) { return x.str(); }
};

template <> struct series_ring<UTMatrix> {
    static UTMatrix zero_like(const UTMatrix& p) { return UTMatrix(p.dim()); }
    static bool is_zero(const UTMatrix& x) { return x.is_zero(); }
    static UTMatrix neg(const UTMatrix& x) { return -x; }
    static UTMatrix add(const UTMatrix& a, const UTMatrix& b) { return a + b; }
    static UTMatrix sub(const UTMatrix& a, const UTMatrix& b) { return a - b; }
    static UTMatrix mul(const UTMatrix& a, const UTMatrix& b) { return a * b; }
    static UTMatrix scale(const UTMatrix& a, const FieldScalar& c) { return a * c; }
    static UTMatrix embed(const UTMatrix& p, const FieldScalar& c) {
        return UTMatrix::scalar(p.dim(), c);
    }
    static void check_shape(const UTMatrix& p, const UTMatrix& c) {
        if (p.dim() != c.dim())
            throw DimensionError("series coefficient dimension mismatch");
    }
    static std::string str(const UTMatrix& x) { return x.str(); }
};

template <> struct series_ring<Poly> {
    static Poly zero_like(const Poly&) { return {}; }
    static bool is_zero(const Poly& x) { return x.is_zero(); }
    static Poly neg(const Poly& x) { return -x; }
    static Poly add(const Poly& a, const Poly& b) { return a + b; }
    static Poly sub(const Poly& a, const Poly& b) { return a - b; }
    static Poly mul(const Poly& a, const Poly& b) { return a * b; }
    static Poly scale(const Poly& a, const FieldScalar& c) { return a * c; }
    static Poly embed(const Poly&, const FieldScalar& c) { return Poly(c); }
    static void check_shape(const Poly&, const Poly&) {}
    static std::string str(const Poly& x) { return x.str(); }
};

// Truncated Puiseux series with ramification index 1 or 2. The coefficient of
// x^{e/ram} for lo <= e < trunc is known; everything below lo is exactly zero
// and everything at or above trunc is unknown. Stored support is the span
// [lo, lo + coeffs.size()); coefficients between the stored span and trunc
// are known zeros kept implicit. A series built from polynomial data carries
// trunc == kExact, meaning every coefficient is known.
template <class R>
class PuiseuxSeries {
public:
    using Ring = series_ring<R>;
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    // Exact zero.
    explicit PuiseuxSeries(R proto)
        : ram_(1), lo_(kExact), trunc_(kExact), proto_(std::move(proto)) {}

    // Zero within the window [*, trunc).
    static PuiseuxSeries zero(R proto, int ram, long trunc) {
        PuiseuxSeries s(std::move(proto));
        check_ram(ram);
        s.ram_ = ram;
        s.lo_ = trunc;
        s.trunc_ = trunc;
        return s;
    }

    static PuiseuxSeries from_coeffs(R proto, int ram, long lo, std::vector<R> coeffs,
                                     long trunc = kExact) {
        check_ram(ram);
        PuiseuxSeries s(std::move(proto));
        for (const R& c : coeffs) Ring::check_shape(s.proto_, c);
        if (trunc < kExact && trunc < lo + static_cast<long>(coeffs.size()))
            throw Error("domain", "series truncation below the stored coefficient span");
        s.ram_ = ram;
        s.lo_ = lo;
        s.trunc_ = trunc >= kExact ? kExact : trunc;
        s.c_ = std::move(coeffs);
        s.normalize();
        return s;
    }

    // Exact monomial c * x^{e/ram}.
    static PuiseuxSeries monomial(R proto, int ram, long e, R c) {
        return from_coeffs(std::move(proto), ram, e, {std::move(c)});
    }

    static PuiseuxSeries constant(R proto, R c) { return monomial(std::move(proto), 1, 0, std::move(c)); }

    int ram() const { return ram_; }
    long trunc_num() const { return trunc_; }
    bool is_exact() const { return trunc_ >= kExact; }
    const R& proto() const { return proto_; }

    bool has_support() const { return !c_.empty(); }
    // True iff the series is zero as far as it is known.
    bool is_zero_window() const { return c_.empty(); }

    long ld_num() const {
        if (!has_support()) throw Error("domain", "leading exponent of zero series");
        return lo_;
    }
    const R& lc() const {
        if (!has_support()) throw Error("domain", "leading coefficient of zero series");
        return c_.front();
    }

    // Effective lower bound used by the precision rules: the leading exponent
    // for supported series, the truncation bound for window-zero series.
    long lo_bound() const { return has_support() ? lo_ : trunc_; }

    // Stored-support end (exclusive numerator).
    long hi_num() const { return lo_ + static_cast<long>(c_.size()); }

    // Coefficient of x^{e/ram}; throws PrecisionExhausted at or above trunc.
    R coeff(long e) const {
        if (e >= trunc_)
            throw PrecisionExhausted("coefficient x^(" + std::to_string(e) + "/" +
                                     std::to_string(ram_) + ") is beyond the known window");
        if (e < lo_ || e >= hi_num()) return Ring::zero_like(proto_);
        return c_[static_cast<size_t>(e - lo_)];
    }

    const std::vector<R>& stored() const { return c_; }

    PuiseuxSeries operator-() const {
        PuiseuxSeries r = *this;
        for (auto& c : r.c_) c = Ring::neg(c);
        return r;
    }

    PuiseuxSeries operator+(const PuiseuxSeries& o) const { return combined(o, false); }
    PuiseuxSeries operator-(const PuiseuxSeries& o) const { return combined(o, true); }

    PuiseuxSeries operator*(const PuiseuxSeries& o) const {
        auto [a, b] = unified(*this, o);
        long lo = sat_add(a.lo_bound(), b.lo_bound());
        long trunc = std::min(sat_add(a.lo_bound(), b.trunc_), sat_add(b.lo_bound(), a.trunc_));
        if (!a.has_support() || !b.has_support())
            return zero_or_exact(a.proto_, a.ram_, trunc);
        PuiseuxSeries r(a.proto_);
        r.ram_ = a.ram_;
        r.lo_ = lo;
        r.trunc_ = trunc;
        long hi = sat_add(a.hi_num(), b.hi_num()) - 1;
        hi = std::min(hi, trunc);
        if (lo >= hi) { r.lo_ = trunc; return r; }
        r.c_.assign(static_cast<size_t>(hi - lo), Ring::zero_like(a.proto_));
        for (long e = lo; e < hi; ++e) {
            R acc = Ring::zero_like(a.proto_);
            long amin = std::max(a.lo_, e - b.hi_num() + 1);
            long amax = std::min(a.hi_num() - 1, e - b.lo_);
            for (long i = amin; i <= amax; ++i) {
                const R& av = a.c_[static_cast<size_t>(i - a.lo_)];
                if (Ring::is_zero(av)) continue;
                const R& bv = b.c_[static_cast<size_t>(e - i - b.lo_)];
                if (Ring::is_zero(bv)) continue;
                acc = Ring::add(acc, Ring::mul(av, bv));
            }
            r.c_[static_cast<size_t>(e - lo)] = acc;
        }
        r.normalize();
        return r;
    }

    PuiseuxSeries scale(const FieldScalar& c) const {
        if (c.is_zero()) return PuiseuxSeries(proto_); // exactly zero
        PuiseuxSeries r = *this;
        for (auto& x : r.c_) x = Ring::scale(x, c);
        r.normalize(); // scaling by a unit keeps support, but stay safe
        return r;
    }

    // Multiply by x^{e/ram} (at this series' current ramification).
    PuiseuxSeries shift(long e) const {
        PuiseuxSeries r = *this;
        r.lo_ = sat_add(r.lo_, e);
        r.trunc_ = sat_add(r.trunc_, e);
        return r;
    }

    PuiseuxSeries derivative() const {
        PuiseuxSeries r(proto_);
        r.ram_ = ram_;
        r.trunc_ = sat_add(trunc_, -ram_);
        if (!has_support()) { r.lo_ = r.trunc_; return r; }
        r.lo_ = lo_ - ram_;
        r.c_ = c_;
        for (size_t k = 0; k < r.c_.size(); ++k) {
            Rat e(lo_ + static_cast<long>(k), ram_);
            e.canonicalize();
            r.c_[k] = Ring::scale(r.c_[k], FieldScalar(e));
        }
        r.normalize();
        return r;
    }

    // Forget knowledge at numerator t and beyond (no-op if t >= trunc).
    PuiseuxSeries truncate_to(long t) const {
        if (t >= trunc_) return *this;
        PuiseuxSeries r = *this;
        r.trunc_ = t;
        if (r.lo_ >= t) {
            r.c_.clear();
            r.lo_ = t;
        } else if (r.hi_num() > t) {
            r.c_.erase(r.c_.begin() + static_cast<long>(t - r.lo_), r.c_.end());
        }
        r.normalize();
        return r;
    }

    // Rescale to ramification index `target` (a multiple of ram()).
    PuiseuxSeries with_ram(int target) const {
        check_ram(target);
        if (target == ram_) return *this;
        if (target % ram_ != 0)
            throw RamificationCap("cannot rescale ramification " + std::to_string(ram_) +
                                  " to " + std::to_string(target));
        long f = target / ram_;
        PuiseuxSeries r(proto_);
        r.ram_ = target;
        r.trunc_ = sat_scale(trunc_, f);
        if (!has_support()) { r.lo_ = r.trunc_; return r; }
        r.lo_ = lo_ * f;
        r.c_.assign(static_cast<size_t>((c_.size() - 1) * f + 1), Ring::zero_like(proto_));
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k * f] = c_[k];
        return r;
    }

    // Structural equality (same ramification, window, and coefficients).
    bool operator==(const PuiseuxSeries& o) const {
        if (ram_ != o.ram_ || lo_ != o.lo_ || trunc_ != o.trunc_ || c_.size() != o.c_.size())
            return false;
        for (size_t k = 0; k < c_.size(); ++k)
            if (!(series_ring<R>::is_zero(series_ring<R>::sub(c_[k], o.c_[k])))) return false;
        return true;
    }
    bool operator!=(const PuiseuxSeries& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const {
        if (!has_support()) return "0 + O(" + exp_str(var, trunc_) + ")";
        std::string out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (Ring::is_zero(c_[k])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + Ring::str(c_[k]) + ")*" + exp_str(var, lo_ + static_cast<long>(k));
        }
        if (is_exact()) return out;
        return out + " + O(" + exp_str(var, trunc_) + ")";
    }

    static long sat_add(long a, long b) {
        if (a >= kExact / 2 || b >= kExact / 2) return kExact;
        return a + b;
    }

private:
    int ram_;
    long lo_;
    long trunc_;
    std::vector<R> c_;
    R proto_;

    static void check_ram(int ram) {
        if (ram != 1 && ram != 2)
            throw RamificationCap("ramification index " + std::to_string(ram) +
                                  " outside {1, 2}");
    }

    static long sat_scale(long a, long f) { return a >= kExact / 2 ? kExact : a * f; }

    static PuiseuxSeries zero_or_exact(const R& proto, int ram, long trunc) {
        if (trunc >= kExact) return PuiseuxSeries(proto);
        return zero(proto, ram, trunc);
    }

    std::string exp_str(const std::string& var, long e) const {
        if (ram_ == 1) return var + "^" + std::to_string(e);
        return var + "^(" + std::to_string(e) + "/" + std::to_string(ram_) + ")";
    }

    void normalize() {
        size_t a = 0, b = c_.size();
        while (a < b && Ring::is_zero(c_[a])) ++a;
        while (b > a && Ring::is_zero(c_[b - 1])) --b;
        if (a == b) {
            c_.clear();
            lo_ = trunc_;
            return;
        }
        if (a > 0 || b < c_.size()) {
            std::vector<R> kept(c_.begin() + a, c_.begin() + b);
            c_ = std::move(kept);
        }
        lo_ += static_cast<long>(a);
    }

    static std::pair<PuiseuxSeries, PuiseuxSeries> unified(const PuiseuxSeries& a,
                                                           const PuiseuxSeries& b) {
        series_ring<R>::check_shape(a.proto_, b.proto_);
        int target = std::max(a.ram_, b.ram_);
        return {a.with_ram(target), b.with_ram(target)};
    }

    PuiseuxSeries combined(const PuiseuxSeries& o, bool subtract) const {
        auto [a, b] = unified(*this, o);
        PuiseuxSeries r(a.proto_);
        r.ram_ = a.ram_;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        if (!a.has_support() && !b.has_support()) { r.lo_ = r.trunc_; return r; }
        long lo = std::min(a.lo_bound(), b.lo_bound());
        long hi_support = std::numeric_limits<long>::min();
        if (a.has_support()) hi_support = std::max(hi_support, a.hi_num());
        if (b.has_support()) hi_support = std::max(hi_support, b.hi_num());
        long hi = std::min(r.trunc_, hi_support);
        if (lo >= hi) { r.lo_ = r.trunc_; return r; }
        r.lo_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo), Ring::zero_like(a.proto_));
        for (long e = lo; e < hi; ++e) {
            R av = (e >= a.lo_ && e < a.hi_num()) ? a.c_[static_cast<size_t>(e - a.lo_)]
                                                  : Ring::zero_like(a.proto_);
            R bv = (e >= b.lo_ && e < b.hi_num()) ? b.c_[static_cast<size_t>(e - b.lo_)]
                                                  : Ring::zero_like(a.proto_);
            r.c_[static_cast<size_t>(e - lo)] = subtract ? Ring::sub(av, bv) : Ring::add(av, bv);
        }
        r.normalize();
        return r;
    }
};

using ScalarSeries = PuiseuxSeries<FieldScalar>;
using MatrixSeries = PuiseuxSeries<UTMatrix>;
using PolySeries = PuiseuxSeries<Poly>;

// True iff both series are provably equal on the window where both are known.
template <class R>
bool agree(const PuiseuxSeries<R>& x, const PuiseuxSeries<R>& y) {
    int target = std::max(x.ram(), y.ram());
    PuiseuxSeries<R> a = x.with_ram(target), b = y.with_ram(target);
    if (!a.has_support() && !b.has_support()) return true;
    long bound = std::min(a.trunc_num(), b.trunc_num());
    long from = std::min(a.lo_bound(), b.lo_bound());
    long hi_support = std::numeric_limits<long>::min();
    if (a.has_support()) hi_support = std::max(hi_support, a.hi_num());
    if (b.has_support()) hi_support = std::max(hi_support, b.hi_num());
    long to = std::min(bound, hi_support);
    for (long e = from; e < to; ++e) {
        R d = series_ring<R>::sub(a.coeff(e), b.coeff(e));
        if (!series_ring<R>::is_zero(d)) return false;
    }
    return true;
}

// p evaluated at a series argument by Horner; polynomial coefficients embed
// as exact constants, so precision is governed by the argument alone.
template <class R>
PuiseuxSeries<R> evaluate(const Poly& p, const PuiseuxSeries<R>& a) {
    PuiseuxSeries<R> acc(series_ring<R>::zero_like(a.proto()));
    for (size_t k = p.degree() + 1; k-- > 0;) {
        acc = acc * a;
        if (!p.coeff(k).is_zero())
            acc = acc + PuiseuxSeries<R>::constant(series_ring<R>::zero_like(a.proto()),
                                                   series_ring<R>::embed(a.proto(), p.coeff(k)));
    }
    return acc;
}

// Multiplicative inverse. Scalar series invert whenever they have a nonzero
// coefficient in the window. Matrix series invert when the leading
// coefficient has an invertible diagonal (classical recurrence), or, failing
// that, when every diagonal entry series is nonzero in the window: then
// A = D + N with D the diagonal part and N strictly upper, and
// A^{-1} = (sum_k (-D^{-1}N)^k) D^{-1} terminates because N is nilpotent.
// `window` is consulted only for exact inputs, whose inverse is generally an
// infinite series.
ScalarSeries series_inverse(const ScalarSeries& a, long window = -1);
MatrixSeries series_inverse(const MatrixSeries& a, long window = -1);

struct SqrtResult {
    ScalarSeries root;
    bool ramified; // true iff the leading exponent parity forced ram doubling
};

// Square root with leading-coefficient adjunction; `window` as above.
SqrtResult series_sqrt(const ScalarSeries& a, long window = -1);

// Every exponent e/ram in the support satisfies e/ram + r/p integral.
template <class R>
bool supported_on_coset(const PuiseuxSeries<R>& a, long r, long p) {
    if (p != 1 && p != 2) throw Error("domain", "coset modulus must be 1 or 2");
    const long m = static_cast<long>(a.ram()) * p;
    for (long e = a.lo_bound(); e < a.hi_num(); ++e) {
        if (series_ring<R>::is_zero(a.coeff(e))) continue;
        long v = (e * p + r * a.ram()) % m;
        if (v < 0) v += m;
        if (v != 0) return false;
    }
    return true;
}

// Matrix-series helpers.
MatrixSeries superdiag_series(const MatrixSeries& a, int k);
MatrixSeries diag_part_series(const MatrixSeries& a);
ScalarSeries entry_series(const MatrixSeries& a, int i, int j);
// Diagonal part as a scalar series; throws Error("not_scalar_diagonal") if a
// coefficient has unequal diagonal entries.
ScalarSeries semisimple_scalar_series(const MatrixSeries& a);
MatrixSeries embed_scalar_series(const ScalarSeries& a, int n);

} // namespace vamod
