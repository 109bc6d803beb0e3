#pragma once

#include "hodgecalc/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hodgecalc {

/// Column vector in coordinates.
using Vector = std::vector<Scalar>;

/// Dense matrix over Q(i). Operators act on column vectors; a matrix is
/// rows x cols and maps Q(i)^cols to Q(i)^rows. Empty shapes are legal.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const Scalar> entries);
    /// Rows taken from the given vectors, all of length `cols`.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Matrix conj() const;
    /// Conjugate transpose.
    Matrix adjoint() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const { return *this * Scalar(-1); }
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix pow(unsigned exponent) const;
    bool is_zero() const;
    bool is_hermitian() const;

    /// Rows [r0, r0+nr) x cols [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix leading_minor(std::size_t k) const { return block(0, 0, k, k); }
    /// Vertical concatenation; an empty operand with 0 columns adapts.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

    std::span<const Scalar> data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// [A, B] = AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;                  // same shape as the input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination; row space preserved.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Throws InvalidStructure if singular.
Matrix inverse(const Matrix& m);
/// Some solution of a x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

bool is_zero_vector(const Vector& v);
Vector conj(const Vector& v);
Vector scaled(const Vector& v, const Scalar& s);
/// "(a, b, c)" in the scalar grammar, for witnesses.
std::string to_string(const Vector& v);
/// "[[..], [..]]".
std::string to_string(const Matrix& m);

/// Bilinear x^T G y (no conjugation).
Scalar bilinear(const Vector& x, const Matrix& g, const Vector& y);

} // namespace hodgecalc
