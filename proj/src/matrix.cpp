#include "asreg/matrix.hpp"

#include "asreg/errors.hpp"

#include <sstream>

namespace asreg {

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeMismatch("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

FieldSpec Matrix::field() const {
    FieldSpec f = FieldSpec::rationals();
    for (const Scalar& s : data_) {
        if (!s.is_rational()) f = join(f, s.field());
    }
    return f;
}

Matrix Matrix::in(const FieldSpec& f) const {
    Matrix out = *this;
    for (Scalar& s : out.data_) s = s.in(f);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out = *this;
    for (Scalar& e : out.data_) e = e * s;
    return out;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw ShapeMismatch("determinant of non-square matrix");
    Matrix a = *this;
    const std::size_t n = rows_;
    Scalar det = Scalar::one(field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(field());
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        const Scalar inv = a.at(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const Scalar f = a.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeMismatch("inverse of non-square matrix");
    Solution s = solve(*this, identity(rows_));
    if (auto* u = std::get_if<Unique>(&s)) return u->solution;
    throw SingularMap("matrix is not invertible");
}

Matrix Matrix::pow(long e) const {
    Matrix base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Matrix result = identity(rows_);
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}, 0};
    Matrix& a = out.matrix;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Scalar f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Matrix> kernel(const Matrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    const FieldSpec f = m.field();
    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Matrix v(n, 1);
        for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = Scalar::zero(f);
        v.at(free, 0) = Scalar::one(f);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v.at(rr.pivots[k], 0) = -rr.matrix.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Solution solve(const Matrix& m, const Matrix& rhs) {
    if (m.rows() != rhs.rows()) throw ShapeMismatch("solve: row counts differ");
    const FieldSpec f = join(m.field(), rhs.field());
    const std::size_t n = m.cols(), k = rhs.cols();
    Matrix aug(m.rows(), n + k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < k; ++j) aug.at(i, n + j) = rhs.at(i, j);
    }
    const RrefResult rr = rref(aug);
    for (std::size_t p : rr.pivots)
        if (p >= n) return Inconsistent{};
    Matrix particular(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) particular.at(i, j) = Scalar::zero(f);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (std::size_t j = 0; j < k; ++j) particular.at(rr.pivots[r], j) = rr.matrix.at(r, n + j);
    std::vector<Matrix> ker = kernel(m);
    if (ker.empty()) return Unique{particular};
    return Underdetermined{particular, ker};
}

bool proportional(const Matrix& a, const Matrix& b, Scalar& c) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    bool found = false;
    for (std::size_t i = 0; i < b.rows() && !found; ++i)
        for (std::size_t j = 0; j < b.cols() && !found; ++j)
            if (!b.at(i, j).is_zero()) {
                c = a.at(i, j) / b.at(i, j);
                found = true;
            }
    if (!found) return false;
    return a == b.scaled(c);
}

}  // namespace asreg
