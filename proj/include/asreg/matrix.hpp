#pragma once

#include "asreg/field.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace asreg {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    // Row-major initializer, e.g. Matrix::from_rows({{1, 0}, {0, 1}}).
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix identity(std::size_t n);
    static Matrix column(const std::vector<Scalar>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    // Join of all entry fields; rationals if every entry is rational.
    FieldSpec field() const;
    Matrix in(const FieldSpec& f) const;

    Matrix transpose() const;
    bool is_zero() const;
    Matrix scaled(const Scalar& s) const;

    Scalar determinant() const;
    bool invertible() const { return !determinant().is_zero(); }
    // Throws SingularMap.
    Matrix inverse() const;
    Matrix pow(long e) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of the right kernel {v : m v = 0}, one column matrix per vector.
std::vector<Matrix> kernel(const Matrix& m);

struct Unique {
    Matrix solution;
};
struct Underdetermined {
    Matrix particular;
    std::vector<Matrix> kernel;
};
struct Inconsistent {};
using Solution = std::variant<Unique, Underdetermined, Inconsistent>;

// Solves m * X = rhs exactly. Throws ShapeMismatch when row counts differ.
Solution solve(const Matrix& m, const Matrix& rhs);

// c with a = c * b when such a scalar exists (b nonzero).
bool proportional(const Matrix& a, const Matrix& b, Scalar& c);

}  // namespace asreg
