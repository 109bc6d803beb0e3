#include "hodgecalc/errors.hpp"
#include "hodgecalc/hodge.hpp"
#include "hodgecalc/sl2hodge.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hodgecalc;
using namespace testsupport;

namespace {

/// A pure structure in which row a of `basis` has type (p[a], w - p[a]).
struct Typed {
    Matrix basis;
    std::vector<int> p;
    int w = 0;
    PureHodge h;
};

Typed typed(const Matrix& basis, std::vector<int> p, int w)
{
    std::size_t n = basis.rows();
    auto flag = [&](auto&& keep) {
        std::map<int, Subspace> steps;
        for (int k = -6; k <= 6; ++k) {
            std::vector<Vector> vs;
            for (std::size_t a = 0; a < n; ++a)
                if (keep(a, k))
                    vs.push_back(basis.row(a));
            steps[k] = Subspace::span(n, vs);
        }
        steps[-7] = Subspace::full(n);
        return DecreasingFiltration(n, steps);
    };
    auto fp = flag([&](std::size_t a, int k) { return p[a] >= k; });
    auto fpp = flag([&](std::size_t a, int k) { return w - p[a] >= k; });
    return Typed{basis, p, w, PureHodge{n, fp, fpp, w}};
}

Typed random_typed(std::size_t n, int w, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    for (auto& x : p)
        x = static_cast<int>(rng() % 4) - 1;
    return typed(harness::unimodular(n, rng), p, w);
}

/// A polarization: positive multiples of (-1)^q on the diagonal of the typed
/// basis, plus hermitian coupling between vectors of the same type.
SesquilinearForm polarization_of(const Typed& t, std::mt19937_64& rng)
{
    std::size_t n = t.basis.rows();
    Matrix k(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        int q = t.w - t.p[a];
        k(a, a) = Scalar(static_cast<long>(2 * n + rng() % 3)) * Scalar(q % 2 == 0 ? 1 : -1);
        for (std::size_t b = a + 1; b < n; ++b)
            if (t.p[a] == t.p[b]) {
                Scalar c = Scalar(static_cast<long>(rng() % 3) - 1, static_cast<long>(rng() % 3) - 1) *
                           Scalar(q % 2 == 0 ? 1 : -1);
                k(a, b) = c;
                k(b, a) = c.conj();
            }
    }
    // B G B* = K, the hermitian form in the typed basis (diagonally dominant).
    Matrix bi = inverse(t.basis);
    return SesquilinearForm{bi * k * bi.adjoint(), t.w};
}

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

PureHodge elliptic()
{
    Vector v{Scalar(1), Scalar::i()}, vb{Scalar(1), -Scalar::i()};
    DecreasingFiltration fp(2, {{0, Subspace::full(2)}, {1, Subspace::span(2, {v})}});
    DecreasingFiltration fpp(2, {{0, Subspace::full(2)}, {1, Subspace::span(2, {vb})}});
    return PureHodge{2, fp, fpp, 1};
}

} // namespace

TEST_CASE("check_pure examples")
{
    PureHodge triv{3, DecreasingFiltration::trivial(3, 0), DecreasingFiltration::trivial(3, 0), 0};
    Report r = check_pure(triv);
    CHECK(r.passed);
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("h^{0,0} = 3") != std::string::npos);

    Report ell = check_pure(elliptic());
    CHECK(ell.passed);
    auto pieces = hodge_decomposition(elliptic());
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].second.dim() == 1);
    CHECK(pieces[1].second.dim() == 1);

    PureHodge bad = elliptic();
    bad.fsecond = bad.fprime;
    Report b = check_pure(bad);
    CHECK_FALSE(b.passed);
    CHECK_FALSE(b.witness.empty());
    CHECK_THROWS_AS(hodge_decomposition(bad), InvalidStructure);
}

TEST_CASE("random typed structures are pure")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        Typed ty = random_typed(2 + t % 4, 1 + t % 3, rng);
        CHECK(check_pure(ty.h).passed);
        CHECK(check_mixed(as_mixed(ty.h)).passed);
        PureHodge shifted = ty.h;
        shifted.weight += 1;
        CHECK_FALSE(check_pure(shifted).passed);
    }
}

TEST_CASE("tate twist")
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; ++t) {
        Typed ty = random_typed(3, 2, rng);
        int l = static_cast<int>(rng() % 5) - 2;
        PureHodge tw = tate_twist(ty.h, l);
        CHECK(tw.weight == ty.h.weight - 2 * l);
        CHECK(check_pure(tw).passed);
        PureHodge back = tate_twist(tw, -l);
        CHECK(back.fprime == ty.h.fprime);
        CHECK(back.fsecond == ty.h.fsecond);
        CHECK(back.weight == ty.h.weight);
        PureHodge same = tate_twist(ty.h, 0);
        CHECK(same.fprime == ty.h.fprime);
    }
}

TEST_CASE("Deligne-Weil operator examples")
{
    PureHodge triv{2, DecreasingFiltration::trivial(2, 0), DecreasingFiltration::trivial(2, 0), 0};
    CHECK(deligne_weil(triv) == Matrix::identity(2));

    Matrix c = deligne_weil(elliptic());
    Vector v{Scalar(1), Scalar::i()}, vb{Scalar(1), -Scalar::i()};
    CHECK(c * v == v);
    CHECK(c * vb == scaled(vb, Scalar(-1)));

    Typed w2 = typed(Matrix::identity(3), {2, 1, 0}, 2);
    CHECK(deligne_weil(w2.h) == Matrix::diagonal(std::vector<Scalar>{Scalar(1), Scalar(-1), Scalar(1)}));

    PureHodge bad = elliptic();
    bad.fsecond = bad.fprime;
    CHECK_THROWS_AS(deligne_weil(bad), InvalidStructure);
}

TEST_CASE("Deligne-Weil operator against the typed basis")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        Typed ty = random_typed(2 + t % 4, t % 3, rng);
        Matrix c = deligne_weil(ty.h);
        for (std::size_t a = 0; a < ty.basis.rows(); ++a) {
            int q = ty.w - ty.p[a];
            CHECK(c * ty.basis.row(a) == scaled(ty.basis.row(a), Scalar(q % 2 == 0 ? 1 : -1)));
        }
        int l = static_cast<int>(rng() % 5) - 2;
        CHECK(deligne_weil(tate_twist(ty.h, l)) == c * Scalar(l % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("check_morphism")
{
    std::mt19937_64 rng(24);
    Typed ty = random_typed(4, 2, rng);
    CHECK(check_morphism(Matrix::identity(4), ty.h, ty.h, 0).passed);
    CHECK(check_morphism(Matrix::zero(4, 4), ty.h, ty.h, 3).passed);

    // J3 limiting structure: N : H -> H(-1) but not H -> H.
    Matrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    DecreasingFiltration f(3, {{-1, Subspace::full(3)}, {0, e(3, {1, 2})}, {1, e(3, {2})}});
    IncreasingFiltration w(3, {{-2, e(3, {0})}, {0, e(3, {0, 1})}, {2, Subspace::full(3)}});
    MixedHodge m{3, f, f, w};
    CHECK(check_mixed(m).passed);
    CHECK(check_morphism(n, m, m, -1).passed);
    CHECK_FALSE(check_morphism(n, m, m, 0).passed);

    MixedHodge shifted{3, f, f, w.shifted(1)};
    CHECK_FALSE(check_mixed(shifted).passed);
}

TEST_CASE("kernels and images of morphisms are pure")
{
    std::mt19937_64 rng(25);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 3 + t % 3;
        Typed ty = random_typed(n, 2, rng);
        // An endomorphism preserving types: arbitrary within each type block.
        Matrix k(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (ty.p[a] == ty.p[b] && rng() % 2)
                    k(a, b) = small_scalar(rng, 1);
        Matrix bt = ty.basis.transpose();
        Matrix f = bt * k * inverse(bt);
        REQUIRE(check_morphism(f, ty.h, ty.h, 0).passed);
        Subspace ker = kernel(f), im = image(f);
        if (!ker.is_zero())
            CHECK(check_pure(restrict_pure(ty.h.fprime, ty.h.fsecond, ker, ty.w)).passed);
        if (!im.is_zero())
            CHECK(check_pure(restrict_pure(ty.h.fprime, ty.h.fsecond, im, ty.w)).passed);
    }
}

TEST_CASE("check_polarization examples")
{
    PureHodge one{1, DecreasingFiltration::trivial(1, 0), DecreasingFiltration::trivial(1, 0), 0};
    CHECK(check_polarization(one, SesquilinearForm{Matrix{{1}}, 0}).passed);
    CHECK_FALSE(check_polarization(one, SesquilinearForm{Matrix{{-1}}, 0}).passed);

    SesquilinearForm s{Matrix{{0, Scalar::i()}, {-Scalar::i(), 0}}, 1};
    CHECK(check_polarization(elliptic(), s).passed);
    SesquilinearForm flipped{s.gram * Scalar(-1), 1};
    Report f = check_polarization(elliptic(), flipped);
    CHECK_FALSE(f.passed);
    CHECK(f.witness.find("minor") != std::string::npos);

    // H^{1,0} = e0 paired with H^{0,1} = e1: condition (b).
    Typed split = typed(Matrix::identity(2), {1, 0}, 1);
    CHECK(check_polarization(split.h, SesquilinearForm{Matrix{{1, 0}, {0, -1}}, 1}).passed);
    Report b = check_polarization(split.h, SesquilinearForm{Matrix{{1, 1}, {1, -1}}, 1});
    CHECK_FALSE(b.passed);
    CHECK(b.witness.find("(b)") != std::string::npos);

    CHECK_THROWS_AS(check_polarization(elliptic(), SesquilinearForm{s.gram, 2}), ConventionError);
    CHECK_FALSE(check_polarization(elliptic(), SesquilinearForm{Matrix{{0, 1}, {0, 0}}, 1}).passed);
}

TEST_CASE("polarization: random, twisted, scrambled")
{
    std::mt19937_64 rng(26);
    for (int t = 0; t < 30; ++t) {
        Typed ty = random_typed(2 + t % 4, 1 + t % 3, rng);
        SesquilinearForm s = polarization_of(ty, rng);
        CHECK(check_polarization(ty.h, s).passed);
        SesquilinearForm neg{s.gram * Scalar(-1), s.target_twist};
        CHECK_FALSE(check_polarization(ty.h, neg).passed);

        int l = static_cast<int>(rng() % 5) - 2;
        CHECK(check_polarization(tate_twist(ty.h, l), twist_form(s, l)).passed);
        CHECK_FALSE(check_polarization(tate_twist(ty.h, l), twist_form(neg, l)).passed);

        Matrix p = harness::unimodular(ty.basis.rows(), rng);
        Matrix pi = inverse(p);
        PureHodge moved{ty.h.dim, harness::transport(ty.h.fprime, p), harness::transport(ty.h.fsecond, p),
                        ty.h.weight};
        SesquilinearForm sm{harness::transport_gram(s.gram, pi), s.target_twist};
        CHECK(check_polarization(moved, sm).passed);
        SesquilinearForm nm{harness::transport_gram(neg.gram, pi), s.target_twist};
        CHECK_FALSE(check_polarization(moved, nm).passed);
    }
}

TEST_CASE("real structures")
{
    CHECK(check_real_structure(elliptic(), RealStructureWitness{Matrix::identity(2)}).passed);
    CHECK_FALSE(check_real_structure(elliptic(), RealStructureWitness{Matrix{{0, 1}, {1, 0}}}).passed);
    // i times the identity is another involution with the same conjugate flag.
    CHECK(check_real_structure(elliptic(), RealStructureWitness{Matrix::identity(2) * Scalar::i()}).passed);
    // J conj(J) != I.
    CHECK_FALSE(check_real_structure(elliptic(), RealStructureWitness{Matrix{{1, 1}, {0, 1}}}).passed);

    // Weight 2 with H^{2,0}, H^{1,1}, H^{0,2} swapped by J.
    Typed w2 = typed(Matrix::identity(3), {2, 1, 0}, 2);
    Matrix j{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(check_real_structure(w2.h, RealStructureWitness{j}).passed);
    CHECK_FALSE(check_real_structure(w2.h, RealStructureWitness{Matrix::identity(3)}).passed);
}

TEST_CASE("pair and restricted_gram follow the Gram convention")
{
    std::mt19937_64 rng(27);
    for (int t = 0; t < 20; ++t) {
        Matrix g = random_matrix(3, 3, rng);
        Vector x = random_matrix(3, 1, rng).column(0), y = random_matrix(3, 1, rng).column(0);
        SesquilinearForm s{g, 0};
        Scalar want;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                want += x[a] * g(a, b) * y[b].conj();
        CHECK(pair(s, x, y) == want);
        Matrix basis = Matrix::from_rows({x, y}, 3);
        Matrix r = restricted_gram(g, basis);
        CHECK(r(0, 1) == want);
    }
}
