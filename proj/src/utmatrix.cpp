#include "vamod/utmatrix.hpp"

#include "vamod/errors.hpp"

namespace vamod {

UTMatrix::UTMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxDim)
        throw DimensionError("matrix dimension " + std::to_string(n) +
                             " outside [1, " + std::to_string(kMaxDim) + "]");
    e_.assign(static_cast<size_t>(n) * n, FieldScalar());
}

UTMatrix UTMatrix::identity(int n) {
    UTMatrix m(n);
    for (int i = 0; i < n; ++i) m.e_[m.idx(i, i)] = FieldScalar(1);
    return m;
}

UTMatrix UTMatrix::scalar(int n, const FieldScalar& c) {
    UTMatrix m(n);
    for (int i = 0; i < n; ++i) m.e_[m.idx(i, i)] = c;
    return m;
}

UTMatrix UTMatrix::jordan(int n) {
    UTMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m.e_[m.idx(i, i + 1)] = FieldScalar(1);
    return m;
}

UTMatrix UTMatrix::unit(int n, int i, int j) {
    UTMatrix m(n);
    m.set(i, j, FieldScalar(1));
    return m;
}

const FieldScalar& UTMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DimensionError("matrix index out of range");
    return e_[idx(i, j)];
}

void UTMatrix::set(int i, int j, const FieldScalar& v) {
    if (i < 0 || j < i || j >= n_)
        throw DimensionError("upper-triangular entry requires 0 <= i <= j < n");
    e_[idx(i, j)] = v;
}

void UTMatrix::check_same_dim(const UTMatrix& o) const {
    if (n_ != o.n_)
        throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " +
                             std::to_string(o.n_));
}

bool UTMatrix::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

UTMatrix UTMatrix::operator-() const {
    UTMatrix r = *this;
    for (auto& c : r.e_) c = -c;
    return r;
}

UTMatrix UTMatrix::operator+(const UTMatrix& o) const {
    check_same_dim(o);
    UTMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
    return r;
}

UTMatrix UTMatrix::operator-(const UTMatrix& o) const {
    check_same_dim(o);
    UTMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
    return r;
}

UTMatrix UTMatrix::operator*(const UTMatrix& o) const {
    check_same_dim(o);
    UTMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            FieldScalar acc;
            for (int k = i; k <= j; ++k) {
                const FieldScalar& a = e_[idx(i, k)];
                if (a.is_zero()) continue;
                const FieldScalar& b = o.e_[o.idx(k, j)];
                if (b.is_zero()) continue;
                acc += a * b;
            }
            r.e_[r.idx(i, j)] = acc;
        }
    return r;
}

UTMatrix UTMatrix::operator*(const FieldScalar& c) const {
    UTMatrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

bool UTMatrix::operator==(const UTMatrix& o) const {
    return n_ == o.n_ && e_ == o.e_;
}

UTMatrix UTMatrix::superdiagonal(int k) const {
    UTMatrix r(n_);
    if (k < 0 || k >= n_) return r;
    for (int i = 0; i + k < n_; ++i) r.e_[r.idx(i, i + k)] = e_[idx(i, i + k)];
    return r;
}

bool UTMatrix::is_toeplitz() const {
    for (int k = 0; k < n_; ++k)
        for (int i = 1; i + k < n_; ++i)
            if (e_[idx(i, i + k)] != e_[idx(0, k)]) return false;
    return true;
}

bool UTMatrix::diagonal_is_scalar() const {
    for (int i = 1; i < n_; ++i)
        if (e_[idx(i, i)] != e_[idx(0, 0)]) return false;
    return true;
}

const FieldScalar& UTMatrix::diagonal_value() const {
    return e_[idx(0, 0)];
}

UTMatrix UTMatrix::inverse() const {
    for (int i = 0; i < n_; ++i)
        if (e_[idx(i, i)].is_zero())
            throw SingularMatrix("zero diagonal entry at position " + std::to_string(i));
    UTMatrix b(n_);
    std::vector<FieldScalar> dinv(n_);
    for (int i = 0; i < n_; ++i) dinv[i] = e_[idx(i, i)].inverse();
    for (int i = n_ - 1; i >= 0; --i) {
        b.e_[b.idx(i, i)] = dinv[i];
        for (int j = i + 1; j < n_; ++j) {
            FieldScalar acc;
            for (int k = i + 1; k <= j; ++k) acc += e_[idx(i, k)] * b.e_[b.idx(k, j)];
            b.e_[b.idx(i, j)] = -(dinv[i] * acc);
        }
    }
    return b;
}

std::string UTMatrix::str() const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < n_; ++j) out += (j ? "," : "") + e_[idx(i, j)].str();
    }
    return out + "]";
}

UTMatrix evaluate(const Poly& p, const UTMatrix& x) {
    UTMatrix acc(x.dim());
    for (size_t k = p.degree() + 1; k-- > 0;)
        acc = acc * x + UTMatrix::scalar(x.dim(), p.coeff(k));
    return acc;
}

} // namespace vamod
