#pragma once

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls the elimination routines under test unless noted.

#include "hodgecalc/harness/generator.hpp"
#include "hodgecalc/matrix.hpp"
#include "hodgecalc/subspace.hpp"

#include <random>
#include <vector>

namespace testsupport {

using hodgecalc::Matrix;
using hodgecalc::Scalar;
using hodgecalc::Subspace;
using hodgecalc::Vector;

inline Scalar small_scalar(std::mt19937_64& rng, int bound = 3)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    return Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
}

inline Scalar small_rational(std::mt19937_64& rng, int bound = 3)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Scalar(mpq_class(d(rng), den(rng)));
}

inline Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 3)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = small_scalar(rng, bound);
    return m;
}

/// r x c of rank at most k.
inline Matrix random_low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng)
{
    return random_matrix(r, k, rng, 2) * random_matrix(k, c, rng, 2);
}

inline Matrix random_hermitian(std::size_t n, std::mt19937_64& rng)
{
    Matrix a = random_matrix(n, n, rng, 2);
    return a + a.adjoint();
}

inline Subspace random_subspace(std::size_t n, std::size_t k, std::mt19937_64& rng)
{
    return Subspace(n, random_matrix(k, n, rng, 2));
}

/// Determinant by cofactor expansion along the first row.
inline Scalar cofactor_det(const Matrix& m)
{
    std::size_t n = m.rows();
    if (n == 0)
        return Scalar(1);
    if (n == 1)
        return m(0, 0);
    Scalar total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, jj++) = m(i, j);
        Scalar term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    choose(n, k, 0, cur, out);
    return out;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Matrix& m)
{
    std::size_t best = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        bool found = false;
        for (const auto& rs : subsets(m.rows(), k)) {
            for (const auto& cs : subsets(m.cols(), k)) {
                Matrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub(i, j) = m(rs[i], cs[j]);
                if (!cofactor_det(sub).is_zero()) {
                    found = true;
                    break;
                }
            }
            if (found)
                break;
        }
        if (!found)
            return best;
        best = k;
    }
    return best;
}

/// Diagonalizes a hermitian form by congruence (symmetric row and column
/// operations). Each pivot is the value of the form on a nonzero vector, so
/// a non-positive one settles the question.
inline bool congruence_positive_definite(Matrix g)
{
    std::size_t n = g.rows();
    for (std::size_t k = 0; k < n; ++k) {
        Scalar piv = g(k, k);
        if (!piv.is_real() || sgn(piv.re()) <= 0)
            return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            Scalar f = g(r, k) / piv;
            for (std::size_t c = 0; c < n; ++c)
                g(r, c) -= f * g(k, c);
            for (std::size_t c = 0; c < n; ++c)
                g(c, r) -= f.conj() * g(c, k);
        }
    }
    return true;
}

/// dim(a ∩ b) from ranks alone.
inline std::size_t intersection_dim(const Subspace& a, const Subspace& b)
{
    return a.dim() + b.dim() - minor_rank(Matrix::vstack(a.basis(), b.basis()));
}

inline std::size_t stacked_rank(const Matrix& a, const Matrix& b)
{
    return minor_rank(Matrix::vstack(a, b));
}

} // namespace testsupport
