#include "hodgecalc/errors.hpp"
#include "hodgecalc/filtration.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hodgecalc;
using namespace testsupport;

namespace {

Subspace e(std::size_t n, std::vector<std::size_t> idx)
{
    std::vector<Vector> vs;
    for (auto i : idx) {
        Vector v(n);
        v[i] = Scalar(1);
        vs.push_back(v);
    }
    return Subspace::span(n, vs);
}

/// Random full flag F^0 = V ⊃ F^1 ⊃ ... from a random basis.
DecreasingFiltration random_flag(std::size_t n, std::mt19937_64& rng)
{
    Matrix b = harness::unimodular(n, rng);
    std::map<int, Subspace> steps;
    for (std::size_t p = 0; p < n; ++p)
        steps[static_cast<int>(p)] = Subspace(n, b.block(p, 0, n - p, n));
    return DecreasingFiltration(n, steps);
}

} // namespace

TEST_CASE("increasing filtration lookups")
{
    IncreasingFiltration w(3, {{-1, e(3, {0})}, {0, e(3, {0, 1})}, {1, Subspace::full(3)}});
    CHECK(w.at(-2).is_zero());
    CHECK(w.at(-1) == e(3, {0}));
    CHECK(w.at(5).is_full());
    std::vector<int> want{-1, 0, 1};
    CHECK(w.graded_indices() == want);
    for (int k : {-1, 0, 1})
        CHECK(graded_piece(w, k).dim() == 1);
    CHECK(graded_piece(w, 3).dim() == 0);
    CHECK(w.shifted(2).at(-3) == w.at(-1));

    IncreasingFiltration t = IncreasingFiltration::trivial(4, 0);
    CHECK(graded_piece(t, 0).dim() == 4);
    CHECK(graded_piece(t, 1).dim() == 0);
    CHECK(graded_piece(t, -1).dim() == 0);

    CHECK_THROWS_AS(IncreasingFiltration(2, {{0, e(2, {0})}, {1, e(2, {1})}}), InvalidStructure);
}

TEST_CASE("decreasing filtration lookups")
{
    DecreasingFiltration f(2, {{0, Subspace::full(2)}, {1, e(2, {1})}});
    CHECK(f.at(-5).is_full());
    CHECK(f.at(1) == e(2, {1}));
    CHECK(f.at(2).is_zero());
    CHECK(f.top() == 1);
    CHECK(f.bottom() == 0);
    CHECK(f.shifted(-1).at(2) == f.at(1));
    CHECK_THROWS_AS(DecreasingFiltration(2, {{0, e(2, {0})}}), InvalidStructure);
}

TEST_CASE("graded dimensions add up")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 5;
        Matrix b = harness::unimodular(n, rng);
        std::map<int, Subspace> steps;
        std::size_t d = 0;
        int k = -3;
        while (d < n) {
            d = std::min(n, d + 1 + rng() % 2);
            steps[k] = Subspace(n, b.block(0, 0, d, n));
            k += 1 + static_cast<int>(rng() % 3);
        }
        IncreasingFiltration w(n, steps);
        std::size_t total = 0;
        for (int j = -4; j <= k + 1; ++j)
            total += graded_piece(w, j).dim();
        CHECK(total == n);
    }
}

TEST_CASE("induced filtration examples")
{
    DecreasingFiltration f(2, {{0, Subspace::full(2)}, {1, e(2, {0})}});
    auto same = induced_on_subquotient(f, Subspace::full(2), Subspace::zero(2));
    CHECK(same == f);

    auto on_f1 = induced_on_subquotient(f, e(2, {0}), Subspace::zero(2));
    CHECK(on_f1.ambient_dim() == 1);
    CHECK(on_f1.jumps().size() == 1);
    CHECK(on_f1.at(1).is_full());
    CHECK(on_f1.at(2).is_zero());
}

TEST_CASE("induced filtration agrees with direct enumeration")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 4 + t % 2;
        DecreasingFiltration f = random_flag(n, rng);
        Subspace sub = random_subspace(n, 2 + t % (n - 1), rng);
        Subspace quot = intersect(sub, random_subspace(n, 1 + t % 3, rng));
        auto g = induced_on_subquotient(f, sub, quot);
        CHECK(g.ambient_dim() == sub.dim() - quot.dim());
        for (int p = -1; p <= static_cast<int>(n); ++p) {
            // dim(F^p ∩ sub + quot) - dim quot, using quot ⊆ sub.
            Subspace fp = f.at(p);
            std::size_t want = intersection_dim(fp, sub) - intersection_dim(fp, quot);
            CHECK(g.at(p).dim() == want);
        }
    }
}

TEST_CASE("opposedness examples")
{
    auto trivial = DecreasingFiltration::trivial(3, 0);
    auto r = is_w_opposed(trivial, trivial, 0);
    CHECK(r.opposed);
    REQUIRE(r.pieces.size() == 1);
    CHECK(r.pieces[0].first == 0);
    CHECK(r.pieces[0].second.dim() == 3);

    DecreasingFiltration fp(2, {{0, Subspace::full(2)}, {1, e(2, {0})}});
    DecreasingFiltration fpp2(2, {{0, Subspace::full(2)}, {1, e(2, {1})}});
    auto ok = is_w_opposed(fp, fpp2, 1);
    CHECK(ok.opposed);
    CHECK(ok.pieces.size() == 2);

    auto bad = is_w_opposed(fp, fp, 1);
    CHECK_FALSE(bad.opposed);
    CHECK(bad.dim_sum == 2);
    CHECK(bad.span_dim == 1);
}

TEST_CASE("opposedness is symmetric and matches enumeration")
{
    std::mt19937_64 rng(13);
    int opposed = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 4;
        DecreasingFiltration a = random_flag(n, rng);
        DecreasingFiltration b = (t % 3 == 0) ? a : random_flag(n, rng);
        int w = static_cast<int>(n) - 1;
        auto r = is_w_opposed(a, b, w);
        auto s = is_w_opposed(b, a, w);
        CHECK(r.opposed == s.opposed);
        // Pieces of the swapped pair are the same spaces at p -> w - p.
        std::map<int, Subspace> rs(r.pieces.begin(), r.pieces.end());
        for (const auto& [p, sp] : s.pieces)
            CHECK(rs.at(w - p) == sp);
        // Direct enumeration with rank-only intersections.
        std::size_t dims = 0;
        Matrix all(0, n);
        for (int p = -1; p <= w + 1; ++p) {
            std::size_t d = intersection_dim(a.at(p), b.at(w - p));
            dims += d;
        }
        for (const auto& [p, sp] : r.pieces)
            all = Matrix::vstack(all, sp.basis());
        bool want = dims == n && minor_rank(all) == n;
        CHECK(r.opposed == want);
        opposed += r.opposed;
    }
    CHECK(opposed > 0);
}

TEST_CASE("direct sum of filtrations")
{
    DecreasingFiltration a(1, {{0, Subspace::full(1)}});
    DecreasingFiltration b(2, {{0, Subspace::full(2)}, {1, e(2, {1})}});
    Matrix ea{{1, 0, 0}};
    Matrix eb{{0, 1, 0}, {0, 0, 1}};
    auto s = direct_sum({a, b}, {ea, eb}, 3);
    CHECK(s.at(0).is_full());
    CHECK(s.at(1) == e(3, {2}));
    CHECK(s.at(2).is_zero());
}
