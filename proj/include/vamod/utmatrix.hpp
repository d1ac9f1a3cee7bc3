#pragma once

#include "vamod/poly.hpp"
#include "vamod/scalar.hpp"

#include <vector>

namespace vamod {

// Dense upper-triangular n x n matrix over the scalar tower; entries below
// the diagonal are structurally zero. Dimensions are capped at kMaxDim by
// configuration.
class UTMatrix {
public:
    static constexpr int kMaxDim = 16;

    explicit UTMatrix(int n); // zero matrix
    static UTMatrix identity(int n);
    static UTMatrix scalar(int n, const FieldScalar& c); // c * I
    static UTMatrix jordan(int n);                       // single nilpotent Jordan block J_n
    static UTMatrix unit(int n, int i, int j);           // E_{ij}, i <= j

    int dim() const { return n_; }

    const FieldScalar& at(int i, int j) const;
    void set(int i, int j, const FieldScalar& v); // requires i <= j

    bool is_zero() const;
    UTMatrix operator-() const;
    UTMatrix operator+(const UTMatrix& o) const;
    UTMatrix operator-(const UTMatrix& o) const;
    UTMatrix operator*(const UTMatrix& o) const;
    UTMatrix operator*(const FieldScalar& c) const;
    UTMatrix& operator+=(const UTMatrix& o) { return *this = *this + o; }

    bool operator==(const UTMatrix& o) const;
    bool operator!=(const UTMatrix& o) const { return !(*this == o); }

    // Grade-k part: entries with j - i == k, zero elsewhere.
    UTMatrix superdiagonal(int k) const;

    // True iff every superdiagonal is constant, i.e. the matrix is a
    // polynomial in jordan(n).
    bool is_toeplitz() const;

    bool diagonal_is_scalar() const; // all diagonal entries equal
    const FieldScalar& diagonal_value() const; // entry (0,0)

    UTMatrix inverse() const; // throws SingularMatrix on zero diagonal entry

    std::string str() const; // compact row form, for error messages

private:
    int n_;
    std::vector<FieldScalar> e_; // row-major

    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
    void check_same_dim(const UTMatrix& o) const;
};

// p(X) by Horner.
UTMatrix evaluate(const Poly& p, const UTMatrix& x);

} // namespace vamod
