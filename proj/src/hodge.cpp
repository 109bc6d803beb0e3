#include "hodgecalc/hodge.hpp"

#include "hodgecalc/errors.hpp"

#include <string>

namespace hodgecalc {

namespace {

std::string idx(int p) { return std::to_string(p); }

Subspace conj(const Subspace& s) { return Subspace(s.ambient_dim(), s.basis().conj()); }

// First basis vector of `from` whose image under f leaves `to`, if any.
std::optional<Vector> escape(const Matrix& f, const Subspace& from, const Subspace& to)
{
    for (const auto& v : from.basis_vectors())
        if (!to.contains(f * v))
            return v;
    return std::nullopt;
}

void check_decreasing(Report& r, const char* label, const Matrix& f, const DecreasingFiltration& src,
                      const DecreasingFiltration& dst, int twist)
{
    for (const auto& [p, step] : src.jumps()) {
        if (auto v = escape(f, step, dst.at(p + twist))) {
            r.fail(std::string(label) + "^" + idx(p) + " vector " + to_string(*v) + " maps outside " + label +
                   "^" + idx(p + twist) + " of the target");
            return;
        }
    }
}

} // namespace

Scalar pair(const SesquilinearForm& s, const Vector& x, const Vector& y) { return bilinear(x, s.gram, conj(y)); }

MixedHodge as_mixed(const PureHodge& h)
{
    return MixedHodge{h.dim, h.fprime, h.fsecond, IncreasingFiltration::trivial(h.dim, h.weight)};
}

std::vector<std::pair<int, Subspace>> hodge_decomposition(const PureHodge& h)
{
    auto res = is_w_opposed(h.fprime, h.fsecond, h.weight);
    if (!res.opposed)
        throw InvalidStructure("filtrations are not " + idx(h.weight) + "-opposed");
    return res.pieces;
}

Report check_pure(const PureHodge& h)
{
    Report r("pure of weight " + idx(h.weight));
    if (h.fprime.ambient_dim() != h.dim || h.fsecond.ambient_dim() != h.dim)
        throw DimensionError("pure structure: filtration ambient dimension differs from dim");
    auto res = is_w_opposed(h.fprime, h.fsecond, h.weight);
    for (const auto& [p, piece] : res.pieces)
        r.note("h^{" + idx(p) + "," + idx(h.weight - p) + "} = " + std::to_string(piece.dim()));
    if (!res.opposed)
        r.fail("pieces F'^p ∩ F''^{w-p} have total dimension " + std::to_string(res.dim_sum) + " and span " +
               std::to_string(res.span_dim) + " in dimension " + std::to_string(h.dim));
    return r;
}

Report check_mixed(const MixedHodge& h)
{
    Report r("mixed");
    if (h.weightfil.ambient_dim() != h.dim)
        throw DimensionError("mixed structure: weight filtration ambient dimension differs from dim");
    for (int k : h.weightfil.graded_indices()) {
        Subquotient gr = graded_piece(h.weightfil, k);
        PureHodge piece{gr.dim(), induced_on_subquotient(h.fprime, gr), induced_on_subquotient(h.fsecond, gr), k};
        Report part = check_pure(piece);
        part.name = "gr_" + idx(k) + " " + part.name;
        r.add(std::move(part));
    }
    return r;
}

Report check_real_structure(const PureHodge& h, const RealStructureWitness& rs)
{
    Report r("real structure");
    if (rs.j.rows() != h.dim || rs.j.cols() != h.dim)
        throw DimensionError("real structure matrix has the wrong shape");
    if (!(rs.j * rs.j.conj() == Matrix::identity(h.dim))) {
        r.fail("J conj(J) is not the identity");
        return r;
    }
    // Both filtrations decrease, so the compatible condition is F''^p = J conj(F'^p);
    // conjugation then exchanges H^{p,q} and H^{q,p}.
    const int lo = std::min(h.fprime.bottom(), h.fsecond.bottom());
    const int hi = std::max(h.fprime.top(), h.fsecond.top()) + 1;
    for (int p = lo; p <= hi; ++p) {
        Subspace image = apply(rs.j, conj(h.fprime.at(p)));
        if (!(image == h.fsecond.at(p))) {
            r.fail("J conj(F'^" + idx(p) + ") differs from F''^" + idx(p));
            return r;
        }
    }
    return r;
}

PureHodge tate_twist(const PureHodge& h, int l)
{
    return PureHodge{h.dim, h.fprime.shifted(l), h.fsecond.shifted(l), h.weight - 2 * l};
}

MixedHodge tate_twist(const MixedHodge& h, int l)
{
    return MixedHodge{h.dim, h.fprime.shifted(l), h.fsecond.shifted(l), h.weightfil.shifted(2 * l)};
}

SesquilinearForm twist_form(const SesquilinearForm& s, int l)
{
    return SesquilinearForm{l % 2 == 0 ? s.gram : -s.gram, s.target_twist - 2 * l};
}

Matrix deligne_weil(const PureHodge& h)
{
    auto pieces = hodge_decomposition(h);
    std::vector<Vector> columns;
    std::vector<Scalar> signs;
    for (const auto& [p, piece] : pieces) {
        int q = h.weight - p;
        for (const auto& v : piece.basis_vectors()) {
            columns.push_back(v);
            signs.emplace_back(q % 2 == 0 ? 1 : -1);
        }
    }
    if (h.dim == 0)
        return Matrix();
    Matrix basis = Matrix::from_columns(columns, h.dim);
    return basis * Matrix::diagonal(signs) * inverse(basis);
}

Report check_morphism(const Matrix& f, const MixedHodge& src, const MixedHodge& dst, int twist)
{
    Report r("morphism to target(" + idx(twist) + ")");
    if (f.cols() != src.dim || f.rows() != dst.dim)
        throw DimensionError("morphism matrix is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                             " between dimensions " + std::to_string(src.dim) + " and " +
                             std::to_string(dst.dim));
    check_decreasing(r, "F'", f, src.fprime, dst.fprime, twist);
    if (r.passed)
        check_decreasing(r, "F''", f, src.fsecond, dst.fsecond, twist);
    if (r.passed) {
        for (const auto& [k, step] : src.weightfil.jumps()) {
            if (auto v = escape(f, step, dst.weightfil.at(k + 2 * twist))) {
                r.fail("W_" + idx(k) + " vector " + to_string(*v) + " maps outside W_" + idx(k + 2 * twist) +
                       " of the target");
                break;
            }
        }
    }
    return r;
}

Report check_morphism(const Matrix& f, const PureHodge& src, const PureHodge& dst, int twist)
{
    return check_morphism(f, as_mixed(src), as_mixed(dst), twist);
}

Matrix restricted_gram(const Matrix& gram, const Matrix& basis)
{
    if (basis.rows() == 0)
        return Matrix();
    return basis * gram * basis.adjoint();
}

Report check_polarization(const PureHodge& h, const SesquilinearForm& s)
{
    Report r("polarization of weight " + idx(h.weight));
    if (s.target_twist != h.weight)
        throw ConventionError("pairing takes values in C(" + idx(-s.target_twist) + ") but the weight is " +
                              idx(h.weight));
    if (s.gram.rows() != h.dim || s.gram.cols() != h.dim)
        throw DimensionError("pairing Gram matrix has the wrong shape");
    if (!s.gram.is_hermitian()) {
        r.fail("(a) Gram matrix is not hermitian");
        return r;
    }
    auto res = is_w_opposed(h.fprime, h.fsecond, h.weight);
    if (!res.opposed) {
        r.fail("(b) structure is not pure, no Hodge decomposition");
        return r;
    }
    for (std::size_t a = 0; a < res.pieces.size(); ++a) {
        for (std::size_t b = 0; b < res.pieces.size(); ++b) {
            if (a == b)
                continue;
            for (const auto& x : res.pieces[a].second.basis_vectors()) {
                for (const auto& y : res.pieces[b].second.basis_vectors()) {
                    if (!pair(s, x, y).is_zero()) {
                        int p = res.pieces[a].first;
                        int q = res.pieces[b].first;
                        r.fail("(b) S pairs H^{" + idx(p) + "," + idx(h.weight - p) + "} vector " + to_string(x) +
                               " with H^{" + idx(q) + "," + idx(h.weight - q) + "} vector " + to_string(y));
                        return r;
                    }
                }
            }
        }
    }
    if (h.dim == 0)
        return r;
    Matrix hgram = deligne_weil(h).transpose() * s.gram;
    if (!hgram.is_hermitian()) {
        r.fail("(c) S(C_D x, conj y) is not hermitian");
        return r;
    }
    auto minors = leading_minors(hgram);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        if (!minors[k].is_real() || sgn(minors[k].re()) <= 0) {
            r.fail("(c) leading minor " + std::to_string(k + 1) + " of S(C_D x, conj y) is " +
                   minors[k].to_string());
            return r;
        }
    }
    return r;
}

} // namespace hodgecalc
