#include "hodgecalc/errors.hpp"
#include "hodgecalc/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hodgecalc;
using namespace testsupport;

TEST_CASE("scalar grammar")
{
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("2/3*i") == Scalar(0, mpq_class(2, 3)));
    CHECK(Scalar::parse("1/2-3/4*i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(Scalar(mpq_class(2, 4)).to_string() == "1/2");
    CHECK(Scalar(1, -1).to_string() == "1/1-1/1*i");
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        Scalar a = small_scalar(rng, 9) / Scalar(std::uniform_int_distribution<long>(1, 7)(rng));
        CHECK(Scalar::parse(a.to_string()) == a);
    }
}

TEST_CASE("field arithmetic")
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        Scalar a = small_scalar(rng), b = small_scalar(rng), c = small_scalar(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(Scalar(a.norm()) == a * a.conj());
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        Scalar acc = a;
        acc.add_product(b, c);
        CHECK(acc == a + b * c);
        acc.sub_product(b, c);
        CHECK(acc == a);
    }
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(pow(Scalar::i(), -3) == Scalar::i());
    CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("rref examples")
{
    auto r = rref(Matrix::identity(2));
    CHECK(r.reduced == Matrix::identity(2));
    CHECK(r.rank == 2);

    Matrix m{{1, Scalar::i()}, {Scalar::i(), -1}};
    auto s = rref(m);
    CHECK(s.rank == 1);
    CHECK(s.reduced == Matrix{{1, Scalar::i()}, {0, 0}});
}

TEST_CASE("rank agrees with the minor oracle")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t k = t % 6;
        Matrix m = (t % 3 == 0) ? random_matrix(5, 5, rng) : random_low_rank(5, 5, k, rng);
        CHECK(rank(m) == minor_rank(m));
        CHECK(determinant(m) == cofactor_det(m));
    }
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_low_rank(3 + t % 3, 4, 2, rng);
        CHECK(rank(m) == minor_rank(m));
    }
}

TEST_CASE("inverse and solve")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        Matrix p = harness::unimodular(4, rng);
        CHECK(p * inverse(p) == Matrix::identity(4));
        Vector b = random_matrix(4, 1, rng).column(0);
        auto x = solve(p, b);
        REQUIRE(x);
        CHECK(p * *x == b);
    }
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), InvalidStructure);
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{Scalar(0), Scalar(1)}));
}

TEST_CASE("kernel and image dimensions")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 2 + t % 4, c = 2 + (t / 4) % 4;
        Matrix m = random_low_rank(r, c, t % 3 + 1, rng);
        std::size_t rk = rank(m);
        CHECK(image(m).dim() == rk);
        CHECK(kernel(m).dim() == c - rk);
        for (const auto& v : kernel(m).basis_vectors())
            CHECK(is_zero_vector(m * v));
    }
}

TEST_CASE("subspace examples")
{
    Subspace x0 = Subspace::span(2, {{Scalar(0), Scalar(1)}});
    Subspace y0 = Subspace::span(2, {{Scalar(1), Scalar(0)}});
    CHECK(intersect(x0, y0).is_zero());
    CHECK(sum(x0, y0).is_full());

    Matrix j3{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(kernel(j3).dim() == 1);
}

TEST_CASE("lattice laws on random subspaces")
{
    std::mt19937_64 rng(6);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 3 + t % 3;
        Subspace a = random_subspace(n, 1 + t % n, rng);
        Subspace b = random_subspace(n, 1 + (t / 2) % n, rng);
        Subspace c = random_subspace(n, 1 + (t / 3) % n, rng);
        CHECK(sum(a, b) == sum(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a, sum(a, b)) == a);
        CHECK(sum(a, intersect(a, b)) == a);
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
        CHECK(intersect(a, b).dim() == intersection_dim(a, b));
        // Modular law: a ⊆ c implies a + (b ∩ c) = (a + b) ∩ c.
        Subspace ac = intersect(a, c);
        CHECK(sum(ac, intersect(b, c)) == intersect(sum(ac, b), c));
    }
}

TEST_CASE("subquotient coordinates")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Subspace sub = random_subspace(5, 4, rng);
        Subspace quot = intersect(sub, random_subspace(5, 3, rng));
        Subquotient sq(sub, quot);
        CHECK(sq.dim() == sub.dim() - quot.dim());
        for (const auto& v : quot.basis_vectors())
            CHECK(is_zero_vector(sq.project(v)));
        Vector coords = random_matrix(sq.dim(), 1, rng).column(0);
        if (sq.dim() > 0)
            CHECK(sq.project(sq.lift(coords)) == coords);
    }
}

TEST_CASE("positivity examples")
{
    CHECK(is_positive_definite_hermitian(Matrix::identity(3)));
    CHECK_FALSE(is_positive_definite_hermitian(Matrix{{1, Scalar::i()}, {-Scalar::i(), 1}}));
    CHECK(is_positive_definite_hermitian(Matrix{}));
    CHECK_THROWS_AS(is_positive_definite_hermitian(Matrix{{1, 1}, {0, 1}}), ConventionError);
}

TEST_CASE("positivity agrees with congruence diagonalization")
{
    std::mt19937_64 rng(8);
    int positive = 0;
    for (int t = 0; t < 120; ++t) {
        Matrix g = random_hermitian(4, rng);
        if (t % 2 == 0) {
            // Bias towards definite forms so both verdicts are exercised.
            Matrix a = random_matrix(4, 4, rng, 2);
            g = a * a.adjoint() + Matrix::identity(4) * Scalar(t % 4 == 0 ? 1 : 0);
        }
        bool v = is_positive_definite_hermitian(g);
        positive += v;
        CHECK(v == congruence_positive_definite(g));
    }
    CHECK(positive > 10);
    CHECK(positive < 110);
}

TEST_CASE("positivity is a congruence invariant")
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        Matrix a = random_matrix(4, 4, rng, 2);
        Matrix g = (t % 2) ? a * a.adjoint() : random_hermitian(4, rng);
        Matrix p = harness::unimodular(4, rng);
        CHECK(is_positive_definite_hermitian(g) == is_positive_definite_hermitian(p.adjoint() * g * p));
    }
}

TEST_CASE("characteristic polynomial and roots")
{
    Polynomial chi = characteristic_polynomial(Matrix{{2, 1}, {1, 2}});
    CHECK(chi.coeffs == std::vector<Scalar>{Scalar(3), Scalar(-4), Scalar(1)});
    CHECK(all_roots_positive_real(chi));
    CHECK(rational_roots(chi) == std::vector<mpq_class>{1, 3});

    CHECK_FALSE(all_roots_positive_real(characteristic_polynomial(Matrix{{1, 2}, {2, 1}})));
    // t^2 + 1: no real roots.
    CHECK_FALSE(all_roots_positive_real(characteristic_polynomial(Matrix{{0, -1}, {1, 0}})));
    // (t - 1)^2 (t - 1/2), repeated root.
    Matrix d{{1, 1, 0}, {0, 1, 0}, {0, 0, Scalar::frac(1, 2)}};
    CHECK(all_roots_positive_real(characteristic_polynomial(d)));
    // Irrational positive roots: t^2 - 4t + 2.
    CHECK(all_roots_positive_real(Polynomial{{Scalar(2), Scalar(-4), Scalar(1)}}));
    CHECK(rational_roots(Polynomial{{Scalar(2), Scalar(-4), Scalar(1)}}).empty());

    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(4, 4, rng, 2);
        Polynomial p = characteristic_polynomial(m);
        CHECK(p.degree() == 4);
        CHECK(p(Scalar(0)) == determinant(-m));
    }
}
