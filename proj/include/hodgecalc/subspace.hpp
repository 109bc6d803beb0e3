#pragma once

#include "hodgecalc/matrix.hpp"

#include <optional>
#include <vector>

namespace hodgecalc {

/// A linear subspace of Q(i)^n. The basis is kept in reduced row echelon
/// form, so two subspaces are equal iff their stored bases are identical.
class Subspace {
public:
    Subspace() = default;
    /// Span of the rows of `rows` (any spanning set).
    Subspace(std::size_t ambient_dim, const Matrix& rows);

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim)); }
    static Subspace full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// Vectors v with v^T u = 0 for all u in s (bilinear annihilator).
Subspace annihilator(const Subspace& s);
/// Image of a subspace under an operator.
Subspace apply(const Matrix& op, const Subspace& s);
/// Rows completing a basis of `b` to a basis of `a`; requires b inside a.
Matrix quotient_basis(const Subspace& a, const Subspace& b);

/// Coordinates with respect to a fixed linearly independent family of
/// vectors (the rows of a matrix), with a precomputed left inverse.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    explicit SpanCoordinates(Matrix rows);

    std::size_t size() const { return rows_.rows(); }
    std::size_t ambient_dim() const { return rows_.cols(); }
    /// nullopt if v is not in the span.
    std::optional<Vector> coordinates(const Vector& v) const;
    Vector combine(const Vector& coords) const;

private:
    Matrix rows_;
    std::vector<std::size_t> pivot_cols_;
    Matrix left_inverse_; // size() x size(), applied to the pivot entries
};

/// The quotient sub/quot of two nested subspaces, with chosen coordinates:
/// complement vectors of quot inside sub form the basis of the quotient.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(Subspace sub, Subspace quot);
    static Subquotient of(const Subspace& sub) { return Subquotient(sub, Subspace::zero(sub.ambient_dim())); }

    std::size_t dim() const { return complement_.rows(); }
    std::size_t ambient_dim() const { return sub_.ambient_dim(); }
    const Subspace& sub() const { return sub_; }
    const Subspace& quot() const { return quot_; }
    /// Rows: lifts of the quotient basis to the ambient space.
    const Matrix& lifts() const { return complement_; }

    /// Coordinates of the class of v; throws InvalidStructure if v not in sub.
    Vector project(const Vector& v) const;
    Vector lift(const Vector& coords) const;
    /// Image of (s + quot) in the quotient coordinates; s must lie in sub.
    Subspace project(const Subspace& s) const;

private:
    Subspace sub_;
    Subspace quot_;
    Matrix complement_;
    SpanCoordinates coords_; // complement rows first, then quot basis
};

/// Matrix of the map src -> dst induced by `op`; throws InvalidStructure if
/// op does not carry src.sub into dst.sub and src.quot into dst.quot.
Matrix induced_map(const Matrix& op, const Subquotient& src, const Subquotient& dst);

/// Exact Sylvester test: every leading principal minor is a positive rational.
/// Throws ConventionError if g is not hermitian.
bool is_positive_definite_hermitian(const Matrix& g);
/// Leading principal minors (real for hermitian input).
std::vector<Scalar> leading_minors(const Matrix& g);

} // namespace hodgecalc
