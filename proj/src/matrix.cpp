#include "hodgecalc/matrix.hpp"

#include "hodgecalc/errors.hpp"

#include <string>
#include <utility>

namespace hodgecalc {

namespace {

std::string shape(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k)
        m(k, k) = entries[k];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("row of length " + std::to_string(rows[r].size()) +
                                 ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
    return from_rows(columns, rows).transpose();
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj() const
{
    Matrix m = *this;
    for (auto& s : m.data_)
        s = s.conj();
    return m;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix sum " + shape(*this) + " + " + shape(o));
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix difference " + shape(*this) + " - " + shape(o));
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product " + shape(a) + " * " + shape(b));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Scalar& y = b(k, c);
                if (!y.is_zero())
                    out(r, c).add_product(x, y);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size())
        throw DimensionError("matrix-vector product " + shape(a) + " * " + std::to_string(v.size()));
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(r, k).is_zero() && !v[k].is_zero())
                out[r] += a(r, k) * v[k];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(unsigned exponent) const
{
    if (!is_square())
        throw DimensionError("power of non-square matrix " + shape(*this));
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

bool Matrix::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

bool Matrix::is_hermitian() const { return is_square() && *this == adjoint(); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionError("block out of range in " + shape(*this));
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.rows_ == 0 && top.cols_ == 0)
        return bottom;
    if (bottom.rows_ == 0 && bottom.cols_ == 0)
        return top;
    if (top.cols_ != bottom.cols_)
        throw DimensionError("vstack " + shape(top) + " over " + shape(bottom));
    Matrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right)
{
    return vstack(left.transpose(), right.transpose()).transpose();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowEchelon rref(const Matrix& m)
{
    RowEchelon out{m, 0, {}};
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(a(pivot, k), a(r, k));
        Scalar inv = Scalar(1) / a(r, c);
        for (std::size_t k = c; k < cols; ++k)
            a(r, k) *= inv;
        for (std::size_t other = 0; other < rows; ++other) {
            if (other == r || a(other, c).is_zero())
                continue;
            Scalar factor = a(other, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!a(r, k).is_zero())
                    a(other, k).sub_product(factor, a(r, k));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& m)
{
    if (!m.is_square())
        throw DimensionError("determinant of non-square matrix " + shape(m));
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar(0);
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(a(pivot, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = Scalar(1) / a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero())
                continue;
            Scalar factor = a(r, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                a(r, k) -= factor * a(c, k);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw DimensionError("inverse of non-square matrix " + shape(m));
    const std::size_t n = m.rows();
    RowEchelon e = rref(Matrix::hstack(m, Matrix::identity(n)));
    if (e.rank < n || (n > 0 && e.pivots[n - 1] >= n))
        throw InvalidStructure("matrix is singular");
    return e.reduced.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b)
{
    if (a.rows() != b.size())
        throw DimensionError("solve: right-hand side has wrong length");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    RowEchelon e = rref(aug);
    Vector x(a.cols());
    for (std::size_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] == a.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

bool is_zero_vector(const Vector& v)
{
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

Vector conj(const Vector& v)
{
    Vector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out[k] = v[k].conj();
    return out;
}

Vector scaled(const Vector& v, const Scalar& s)
{
    Vector out = v;
    for (auto& x : out)
        x *= s;
    return out;
}

Scalar bilinear(const Vector& x, const Matrix& g, const Vector& y)
{
    if (x.size() != g.rows() || y.size() != g.cols())
        throw DimensionError("bilinear form: vector length mismatch");
    Scalar out;
    Vector gy = g * y;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero())
            out += x[k] * gy[k];
    return out;
}

std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0)
            out += ", ";
        out += v[k].to_string();
    }
    return out + ")";
}

std::string to_string(const Matrix& m)
{
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0)
            out += ", ";
        out += to_string(m.row(r));
    }
    return out + "]";
}

} // namespace hodgecalc
