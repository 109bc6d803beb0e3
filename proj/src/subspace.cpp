#include "hodgecalc/subspace.hpp"

#include "hodgecalc/errors.hpp"

#include <string>

namespace hodgecalc {

Subspace::Subspace(std::size_t ambient_dim, const Matrix& rows) : ambient_(ambient_dim)
{
    if (rows.rows() > 0 && rows.cols() != ambient_dim)
        throw DimensionError("spanning rows have length " + std::to_string(rows.cols()) +
                             " in ambient dimension " + std::to_string(ambient_dim));
    if (rows.rows() == 0) {
        basis_ = Matrix(0, ambient_dim);
        return;
    }
    RowEchelon e = rref(rows);
    basis_ = e.reduced.block(0, 0, e.rank, ambient_dim);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return Subspace(ambient_dim, Matrix::from_rows(vectors, ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        out.push_back(basis_.row(r));
    return out;
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_)
        throw DimensionError("vector length does not match ambient dimension");
    // Reduce v against the echelon basis: subtract pivot multiples.
    Vector w = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        std::size_t pivot = 0;
        while (basis_(r, pivot).is_zero())
            ++pivot;
        if (w[pivot].is_zero())
            continue;
        Scalar f = w[pivot];
        for (std::size_t c = pivot; c < ambient_; ++c)
            if (!basis_(r, c).is_zero())
                w[c] -= f * basis_(r, c);
    }
    return is_zero_vector(w);
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw DimensionError("subspaces live in different ambient spaces");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Subspace kernel(const Matrix& m)
{
    const std::size_t n = m.cols();
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(n);
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < e.rank; ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

Subspace image(const Matrix& m) { return Subspace(m.rows(), m.transpose()); }

Subspace annihilator(const Subspace& s) { return kernel(s.basis().rows() == 0 ? Matrix(0, s.ambient_dim()) : s.basis()); }

Subspace sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("sum of subspaces in different ambient spaces");
    return Subspace(a.ambient_dim(), Matrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("intersection of subspaces in different ambient spaces");
    if (a.is_zero() || b.is_zero())
        return Subspace::zero(a.ambient_dim());
    if (a.is_full())
        return b;
    if (b.is_full())
        return a;
    // Zassenhaus: reduce [a a; b 0]; rows vanishing on the left half carry
    // a basis of the intersection on the right half.
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim();
    Matrix z(da + b.dim(), 2 * n);
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            z(r, c) = a.basis()(r, c);
            z(r, n + c) = a.basis()(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            z(da + r, c) = b.basis()(r, c);
    RowEchelon e = rref(z);
    std::size_t first = 0;
    while (first < e.rank && e.pivots[first] < n)
        ++first;
    return Subspace(n, e.reduced.block(first, n, e.rank - first, n));
}

Subspace apply(const Matrix& op, const Subspace& s)
{
    if (op.cols() != s.ambient_dim())
        throw DimensionError("operator does not act on this ambient space");
    if (s.is_zero())
        return Subspace::zero(op.rows());
    return Subspace(op.rows(), (op * s.basis().transpose()).transpose());
}

Matrix quotient_basis(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("quotient of subspaces in different ambient spaces");
    if (!a.contains(b))
        throw InvalidStructure("quotient_basis: denominator is not contained in numerator");
    std::vector<Vector> chosen;
    Subspace current = b;
    for (std::size_t r = 0; r < a.dim() && current.dim() < a.dim(); ++r) {
        Vector v = a.basis().row(r);
        if (current.contains(v))
            continue;
        chosen.push_back(v);
        current = sum(current, Subspace::span(a.ambient_dim(), {v}));
    }
    return Matrix::from_rows(chosen, a.ambient_dim());
}

SpanCoordinates::SpanCoordinates(Matrix rows) : rows_(std::move(rows))
{
    const std::size_t k = rows_.rows();
    if (k == 0)
        return;
    // Columns of rows_^T are the family; pick k independent coordinates.
    RowEchelon e = rref(rows_);
    if (e.rank != k)
        throw InvalidStructure("coordinate family is linearly dependent");
    pivot_cols_ = e.pivots;
    Matrix square(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            square(r, c) = rows_(c, pivot_cols_[r]);
    left_inverse_ = inverse(square);
}

std::optional<Vector> SpanCoordinates::coordinates(const Vector& v) const
{
    if (v.size() != rows_.cols() && size() > 0)
        throw DimensionError("coordinates: vector length mismatch");
    Vector pivots(size());
    for (std::size_t r = 0; r < size(); ++r)
        pivots[r] = v[pivot_cols_[r]];
    Vector c = left_inverse_ * pivots;
    if (combine(c) != v)
        return std::nullopt;
    return c;
}

Vector SpanCoordinates::combine(const Vector& coords) const
{
    Vector out(rows_.cols());
    for (std::size_t r = 0; r < size(); ++r) {
        if (coords[r].is_zero())
            continue;
        for (std::size_t c = 0; c < rows_.cols(); ++c)
            if (!rows_(r, c).is_zero())
                out[c] += coords[r] * rows_(r, c);
    }
    return out;
}

Subquotient::Subquotient(Subspace sub, Subspace quot) : sub_(std::move(sub)), quot_(std::move(quot))
{
    complement_ = quotient_basis(sub_, quot_);
    coords_ = SpanCoordinates(Matrix::vstack(complement_, quot_.basis()));
}

Vector Subquotient::project(const Vector& v) const
{
    if (v.size() != ambient_dim())
        throw DimensionError("subquotient projection: vector length mismatch");
    if (sub_.is_zero()) {
        if (!is_zero_vector(v))
            throw InvalidStructure("vector is not in the subquotient numerator");
        return {};
    }
    auto c = coords_.coordinates(v);
    if (!c)
        throw InvalidStructure("vector is not in the subquotient numerator");
    c->resize(dim());
    return *c;
}

Vector Subquotient::lift(const Vector& coords) const
{
    if (coords.size() != dim())
        throw DimensionError("subquotient lift: coordinate length mismatch");
    Vector out(ambient_dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        if (coords[r].is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            out[c] += coords[r] * complement_(r, c);
    }
    return out;
}

Subspace Subquotient::project(const Subspace& s) const
{
    std::vector<Vector> images;
    for (const auto& v : s.basis_vectors())
        images.push_back(project(v));
    return Subspace::span(dim(), images);
}

Matrix induced_map(const Matrix& op, const Subquotient& src, const Subquotient& dst)
{
    if (op.cols() != src.ambient_dim() || op.rows() != dst.ambient_dim())
        throw DimensionError("induced_map: operator shape does not match ambient spaces");
    for (const auto& q : src.quot().basis_vectors())
        if (!dst.quot().contains(op * q))
            throw InvalidStructure("operator does not preserve the quotient subspace");
    Matrix out(dst.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
        Vector image = op * src.lifts().row(c);
        if (!dst.sub().contains(image))
            throw InvalidStructure("operator does not carry the subquotient into the target");
        Vector coords = dst.project(image);
        for (std::size_t r = 0; r < dst.dim(); ++r)
            out(r, c) = coords[r];
    }
    return out;
}

std::vector<Scalar> leading_minors(const Matrix& g)
{
    if (!g.is_square())
        throw DimensionError("leading minors of a non-square matrix");
    std::vector<Scalar> out;
    for (std::size_t k = 1; k <= g.rows(); ++k)
        out.push_back(determinant(g.leading_minor(k)));
    return out;
}

bool is_positive_definite_hermitian(const Matrix& g)
{
    if (!g.is_square())
        throw DimensionError("positivity test needs a square matrix");
    if (!g.is_hermitian())
        throw ConventionError("positivity test called on a non-hermitian matrix");
    for (const auto& minor : leading_minors(g)) {
        if (!minor.is_real())
            throw ConventionError("leading minor of a hermitian matrix is not real");
        if (sgn(minor.re()) <= 0)
            return false;
    }
    return true;
}

} // namespace hodgecalc
