#include "hodgecalc/errors.hpp"
#include "hodgecalc/harness/oracle.hpp"
#include "hodgecalc/nilpotent.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hodgecalc;
using namespace hodgecalc::harness;
using namespace testsupport;

namespace {

Matrix jordan(std::size_t n)
{
    Matrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        j(i, i + 1) = Scalar(1);
    return j;
}

Matrix block_diag(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

std::map<int, std::size_t> gr_dims(const IncreasingFiltration& w, int lo, int hi)
{
    std::map<int, std::size_t> d;
    for (int k = lo; k <= hi; ++k)
        if (auto n = graded_piece(w, k).dim())
            d[k] = n;
    return d;
}

/// X solving [H, X] = 2X and [X, Y] = H, as a linear system in the entries.
std::optional<Matrix> solve_for_x(const Matrix& h, const Matrix& y, bool& unique)
{
    std::size_t n = h.rows(), u = n * n;
    Matrix a(2 * u, u);
    Vector b(2 * u);
    auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t r = var(i, j);
            // (HX - XH - 2X)_{ij}
            for (std::size_t k = 0; k < n; ++k) {
                a(r, var(k, j)) += h(i, k);
                a(r, var(i, k)) -= h(k, j);
            }
            a(r, var(i, j)) -= Scalar(2);
            // (XY - YX)_{ij} = H_{ij}
            for (std::size_t k = 0; k < n; ++k) {
                a(u + r, var(i, k)) += y(k, j);
                a(u + r, var(k, j)) -= y(i, k);
            }
            b[u + r] = h(i, j);
        }
    unique = rank(a) == u;
    auto x = solve(a, b);
    if (!x)
        return std::nullopt;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = (*x)[var(i, j)];
    return m;
}

} // namespace

TEST_CASE("nilpotency")
{
    CHECK(is_nilpotent(jordan(4)));
    CHECK(nilpotency_index(jordan(4)) == 4);
    CHECK(nilpotency_index(Matrix::zero(2, 2)) == 1);
    CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
    CHECK_THROWS_AS(nilpotency_index(Matrix{{1, 1}, {0, 0}}), InvalidStructure);
    CHECK_THROWS_AS(weight_filtration(Matrix::identity(2), 0), InvalidStructure);
}

TEST_CASE("weight filtration examples")
{
    IncreasingFiltration z = weight_filtration(Matrix::zero(3, 3), 2);
    CHECK(z.jumps().size() == 1);
    CHECK(z.jumps().begin()->first == 2);

    Matrix j3 = jordan(3);
    IncreasingFiltration w = weight_filtration(j3, 0);
    CHECK(gr_dims(w, -5, 5) == std::map<int, std::size_t>{{-2, 1}, {0, 1}, {2, 1}});
    CHECK(w.at(1) == w.at(0));
    CHECK(w.at(0) == kernel(j3.pow(2)));
    CHECK(w.at(-1) == image(j3.pow(2)));
    CHECK(w.at(-2) == image(j3.pow(2)));

    IncreasingFiltration w21 = weight_filtration(block_diag(jordan(2), jordan(1)), 0);
    CHECK(gr_dims(w21, -5, 5) == std::map<int, std::size_t>{{-1, 1}, {0, 1}, {1, 1}});

    CHECK(check_weight_filtration(j3, w, 0).passed);
    CHECK_FALSE(check_weight_filtration(j3, w.shifted(1), 0).passed);
    CHECK_FALSE(check_weight_filtration(j3, IncreasingFiltration::trivial(3, 0), 0).passed);
}

TEST_CASE("weight filtration: defining properties, centering, direct sums")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 5;
        Matrix a = random_nilpotent(n, rng);
        int c = static_cast<int>(rng() % 5) - 2;
        IncreasingFiltration w = weight_filtration(a, c);
        CHECK(check_weight_filtration(a, w, c).passed);
        int s = static_cast<int>(rng() % 5) - 2;
        CHECK(weight_filtration(a, c + s) == w.shifted(-s));

        Matrix b = random_nilpotent(1 + t % 3, rng);
        IncreasingFiltration wb = weight_filtration(b, c);
        IncreasingFiltration wab = weight_filtration(block_diag(a, b), c);
        Matrix ea = block_diag(Matrix::identity(n), Matrix::zero(0, b.rows()));
        Matrix eb = block_diag(Matrix::zero(0, n), Matrix::identity(b.rows()));
        for (int k = c - 8; k <= c + 8; ++k) {
            Subspace sa(n + b.rows(), w.at(k).basis() * ea);
            Subspace sb(n + b.rows(), wb.at(k).basis() * eb);
            CHECK(wab.at(k) == sum(sa, sb));
        }
    }
}

TEST_CASE("oracle examples")
{
    IncreasingFiltration z = oracle_weight_filtration(Matrix::zero(2, 2), 1);
    CHECK(z.jumps().size() == 1);
    CHECK(oracle_weight_filtration(jordan(3), 0) == weight_filtration(jordan(3), 0));
    Matrix j22 = block_diag(jordan(2), jordan(2));
    CHECK(oracle_weight_filtration(j22, 1) == weight_filtration(j22, 1));
    CHECK(oracle_lattice(jordan(3)).size() == 4);
}

TEST_CASE("oracle agrees on all small matrices up to dimension 3")
{
    auto family = small_nilpotent_family(3);
    CHECK(family.size() == 1 + 3 + 27);
    for (const auto& a : family)
        for (int c : {-1, 0, 2})
            CHECK(oracle_weight_filtration(a, c) == weight_filtration(a, c));
}

TEST_CASE("oracle agrees on random dimension 4 and 5 instances")
{
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        Matrix a = random_nilpotent(4 + t % 2, rng);
        CHECK(oracle_weight_filtration(a, 0) == weight_filtration(a, 0));
    }
}

TEST_CASE("sl2 completion examples")
{
    Grading g0{{0, Subspace::full(2)}};
    Sl2Triple t0 = complete_sl2(g0, Matrix::zero(2, 2));
    CHECK(t0.x.is_zero());
    CHECK(t0.h.is_zero());

    Grading g1{{-1, Subspace::span(2, {{Scalar(1), Scalar(0)}})}, {1, Subspace::span(2, {{Scalar(0), Scalar(1)}})}};
    Matrix y{{0, 1}, {0, 0}};
    Sl2Triple t1 = complete_sl2(g1, y);
    CHECK(t1.x == Matrix{{0, 0}, {1, 0}});
    CHECK(t1.h == Matrix{{-1, 0}, {0, 1}});
    CHECK(sl2_relation_violation(t1).empty());

    Grading g2;
    for (int k = 0; k < 3; ++k) {
        Vector v(3);
        v[k] = Scalar(1);
        g2[2 * k - 2] = Subspace::span(3, {v});
    }
    Sl2Triple t2 = complete_sl2(g2, jordan(3));
    CHECK(sl2_relation_violation(t2).empty());
    CHECK(t2.h == Matrix::diagonal(std::vector<Scalar>{Scalar(-2), Scalar(0), Scalar(2)}));
    // X Y on the top vector is H there.
    CHECK(t2.x * (t2.y * Vector{Scalar(0), Scalar(0), Scalar(1)}) == Vector{Scalar(0), Scalar(0), Scalar(2)});

    // Grades -1 and 1 with no lowering operator are not an sl2 module.
    CHECK_THROWS_AS(complete_sl2(g1, Matrix::zero(2, 2)), InvalidStructure);
    // Y must lower the grading by 2.
    CHECK_THROWS_AS(complete_sl2(g1, Matrix{{0, 0}, {1, 0}}), InvalidStructure);
}

TEST_CASE("sl2 completion agrees with the linear-system oracle")
{
    std::mt19937_64 rng(33);
    for (int t = 0; t < 12; ++t) {
        std::vector<IrrepSpec> spec;
        std::size_t dim = 0;
        int parity = static_cast<int>(rng() % 2);
        while (dim < 3 || (dim < 5 && rng() % 2)) {
            int m = parity + 2 * static_cast<int>(rng() % 2);
            spec.push_back({m, 0, 3 - m, 1});
            dim += static_cast<std::size_t>(m + 1);
        }
        std::vector<PolarizedSl2> parts;
        for (const auto& s : spec)
            parts.push_back(irrep(s));
        PolarizedSl2 f = direct_sum(parts);
        if (t % 2)
            f = scramble(f, unimodular(dim, rng));
        const Sl2HodgeData& d = f.data;
        Sl2Triple got = complete_sl2(d.grading, d.triple.y);
        CHECK(got.h == grading_operator(d.grading, d.dim));
        bool unique = false;
        auto x = solve_for_x(got.h, d.triple.y, unique);
        REQUIRE(x);
        CHECK(unique);
        CHECK(*x == got.x);
        CHECK(got.x == d.triple.x);
    }
}

TEST_CASE("primitive subspaces and Lefschetz decomposition")
{
    for (int m = 0; m <= 4; ++m) {
        PolarizedSl2 v = irrep({m, 0, 0, 1});
        for (int k = 0; k <= 4; ++k) {
            Subspace p = primitive_subspace(v.data.triple, v.data.grading, k);
            CHECK(p.dim() == (k == m ? 1u : 0u));
        }
        std::size_t nonzero = 0;
        for (const auto& piece : lefschetz_decomposition(v.data.triple, v.data.grading))
            nonzero += !piece.piece.is_zero();
        CHECK(nonzero == static_cast<std::size_t>(m + 1));
        CHECK(hard_lefschetz(v.data.triple, v.data.grading).passed);
    }

    PolarizedSl2 s = direct_sum({irrep({2, 0, 0, 1}), irrep({0, 1, 1, 1})});
    Subspace p0 = primitive_subspace(s.data.triple, s.data.grading, 0);
    CHECK(p0.dim() == 1);
    CHECK(primitive_subspace(s.data.triple, s.data.grading, 2).dim() == 1);

    Grading g{{0, Subspace::full(3)}};
    Sl2Triple zero{Matrix::zero(3, 3), Matrix::zero(3, 3), Matrix::zero(3, 3)};
    for (const auto& piece : lefschetz_decomposition(zero, g))
        CHECK(piece.piece.is_zero() == (piece.k != 0));

    // Diagonal sl2 of V(1) ⊗ V(1): one primitive vector in the middle.
    PolarizedBiSl2 b = tensor(irrep({1, 0, 0, 1}), irrep({1, 0, 0, 1}));
    Grading total;
    for (const auto& [ij, sp] : b.data.bigrading) {
        int k = ij.first + ij.second;
        total[k] = total.count(k) ? sum(total[k], sp) : sp;
    }
    Sl2Triple diag = complete_sl2(total, b.data.first.y + b.data.second.y);
    CHECK(primitive_subspace(diag, total, 0).dim() == 1);
    CHECK(primitive_subspace(diag, total, 2).dim() == 1);
    CHECK(hard_lefschetz(diag, total).passed);
}

TEST_CASE("primitive multiplicities of random direct sums")
{
    std::mt19937_64 rng(34);
    for (int t = 0; t < 25; ++t) {
        std::map<int, std::size_t> mult;
        std::vector<PolarizedSl2> parts;
        std::size_t dim = 0;
        int parity = t % 2;
        do {
            int m = parity + 2 * static_cast<int>(rng() % 3);
            ++mult[m];
            parts.push_back(irrep({m, 1, 4 - m, 1}));
            dim += static_cast<std::size_t>(m + 1);
        } while (dim < 7 && rng() % 3);
        PolarizedSl2 f = scramble(direct_sum(parts), unimodular(dim, rng));
        Sl2Triple tr = complete_sl2(f.data.grading, f.data.triple.y);
        for (int k = 0; k <= 6; ++k)
            CHECK(primitive_subspace(tr, f.data.grading, k).dim() == mult[k]);
        CHECK(hard_lefschetz(tr, f.data.grading).passed);
    }
}

TEST_CASE("hard Lefschetz failure carries a witness")
{
    Grading g{{-1, Subspace::span(2, {{Scalar(1), Scalar(0)}})}, {1, Subspace::span(2, {{Scalar(0), Scalar(1)}})}};
    Sl2Triple t{Matrix::zero(2, 2), grading_operator(g, 2), Matrix::zero(2, 2)};
    Report r = hard_lefschetz(t, g);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witness.empty());
    CHECK_FALSE(sl2_relation_violation(t).empty());
    CHECK_THROWS_AS(validate_grading(Grading{{0, Subspace::span(2, {{Scalar(1), Scalar(0)}})}}, 2),
                    InvalidStructure);
}
