#include "hodgecalc/sl2hodge.hpp"

#include "hodgecalc/errors.hpp"
#include "hodgecalc/polynomial.hpp"

#include <random>
#include <set>
#include <string>

namespace hodgecalc {

namespace {

std::string idx(int k) { return std::to_string(k); }

Matrix embedding(std::size_t rows, std::size_t offset, std::size_t total)
{
    Matrix e(rows, total);
    for (std::size_t r = 0; r < rows; ++r)
        e(r, offset + r) = Scalar(1);
    return e;
}

// The matrix of op on a subspace of the ambient space, in its basis
// coordinates; throws InvalidStructure if op does not map src into dst.
Matrix restricted_map(const Matrix& op, const Subspace& src, const Subspace& dst)
{
    return induced_map(op, Subquotient::of(src), Subquotient::of(dst));
}

void check_ambient(const char* what, std::size_t dim, const Matrix& m)
{
    if (m.rows() != dim || m.cols() != dim)
        throw DimensionError(std::string(what) + " has the wrong shape");
}

// Adjunction identities of a triple with respect to a Gram matrix.
void check_adjunction(Report& r, const Sl2Triple& t, const Matrix& g, const std::string& suffix)
{
    if (!(t.h.transpose() * g == -(g * t.h.conj())))
        r.fail("S(H" + suffix + " x, conj y) != -S(x, conj(H" + suffix + " y))");
    else if (!(t.x.transpose() * g == g * t.x.conj()))
        r.fail("S(X" + suffix + " x, conj y) != S(x, conj(X" + suffix + " y))");
    else if (!(t.y.transpose() * g == g * t.y.conj()))
        r.fail("S(Y" + suffix + " x, conj y) != S(x, conj(Y" + suffix + " y))");
}

void check_split(Report& r, const char* label, const DecreasingFiltration& f, const Grading& g)
{
    for (const auto& [p, step] : f.jumps()) {
        Subspace split = Subspace::zero(f.ambient_dim());
        for (const auto& entry : g)
            split = sum(split, intersect(step, entry.second));
        if (!(split == step)) {
            r.fail(std::string(label) + "^" + idx(p) + " is not the sum of its intersections with the graded pieces");
            return;
        }
    }
}

Report polarization_side(const Sl2HodgeData& d, const SesquilinearForm& s, bool lowering)
{
    if (s.target_twist != d.central_weight)
        throw ConventionError("sl2 pairing takes values in C(" + idx(-s.target_twist) + ") but the central weight is " +
                              idx(d.central_weight));
    check_ambient("pairing Gram matrix", d.dim, s.gram);
    Report r(lowering ? "sl2 polarization via Y" : "sl2 polarization via X");
    r.add(check_sl2_hodge(d));
    if (!r.passed)
        return r;
    Report adj("adjunction identities");
    check_adjunction(adj, d.triple, s.gram, "");
    r.add(std::move(adj));
    if (!r.passed)
        return r;
    for (const auto& [grade, piece] : d.grading) {
        if (lowering ? grade < 0 : grade > 0)
            continue;
        int k = std::abs(grade);
        Subspace prim;
        Matrix form;
        int weight;
        if (lowering) {
            prim = intersect(kernel(d.triple.y.pow(static_cast<unsigned>(k + 1))), piece);
            form = d.triple.y.pow(static_cast<unsigned>(k)).transpose() * s.gram;
            if (k % 2 != 0)
                form = -form;
            weight = d.central_weight + k;
        } else {
            prim = primitive_subspace(d.triple, d.grading, k);
            form = d.triple.x.pow(static_cast<unsigned>(k)).transpose() * s.gram;
            weight = d.central_weight - k;
        }
        if (prim.is_zero())
            continue;
        PureHodge pure = restrict_pure(d.fprime, d.fsecond, prim, weight);
        Report part = check_polarization(pure, SesquilinearForm{restricted_gram(form, prim.basis()), weight});
        part.name = "P H_" + idx(grade) + " " + part.name;
        r.add(std::move(part));
    }
    return r;
}

Subspace sum_of(const std::vector<Subspace>& parts, std::size_t dim)
{
    Subspace out = Subspace::zero(dim);
    for (const auto& p : parts)
        out = sum(out, p);
    return out;
}

Grading first_grading(const BiSl2HodgeData& d, bool first)
{
    std::map<int, std::vector<Subspace>> collect;
    for (const auto& [key, piece] : d.bigrading)
        collect[first ? key.first : key.second].push_back(piece);
    Grading g;
    for (const auto& [k, parts] : collect)
        g.emplace(k, sum_of(parts, d.dim));
    return g;
}

std::string scalar_label(const Scalar& s) { return s.is_real() ? mpq_class(s.re()).get_str() : s.to_string(); }

} // namespace

PureHodge restrict_pure(const DecreasingFiltration& fprime, const DecreasingFiltration& fsecond, const Subspace& sub,
                        int weight)
{
    Subquotient sq = Subquotient::of(sub);
    return PureHodge{sq.dim(), induced_on_subquotient(fprime, sq), induced_on_subquotient(fsecond, sq), weight};
}

Report check_sl2_hodge(const Sl2HodgeData& d)
{
    Report r("sl2-Hodge of central weight " + idx(d.central_weight));
    try {
        validate_grading(d.grading, d.dim);
    } catch (const InvalidStructure& e) {
        r.fail(e.what());
        return r;
    }
    check_ambient("X", d.dim, d.triple.x);
    check_ambient("H", d.dim, d.triple.h);
    check_ambient("Y", d.dim, d.triple.y);
    if (!(d.triple.h == grading_operator(d.grading, d.dim))) {
        r.fail("H is not the grading operator");
        return r;
    }
    if (auto bad = sl2_relation_violation(d.triple); !bad.empty()) {
        r.fail("triple violates " + bad);
        return r;
    }
    check_split(r, "F'", d.fprime, d.grading);
    if (r.passed)
        check_split(r, "F''", d.fsecond, d.grading);
    if (!r.passed)
        return r;
    for (const auto& [k, piece] : d.grading) {
        PureHodge here = restrict_pure(d.fprime, d.fsecond, piece, d.central_weight + k);
        Report part = check_pure(here);
        part.name = "H_" + idx(k) + " " + part.name;
        r.add(std::move(part));
        const std::pair<const Matrix*, int> ops[] = {{&d.triple.x, 2}, {&d.triple.y, -2}};
        for (const auto& [op, step] : ops) {
            const char* label = step > 0 ? "X" : "Y";
            Subspace target = graded_part(d.grading, k + step);
            Matrix f;
            try {
                f = restricted_map(*op, piece, target);
            } catch (const InvalidStructure&) {
                r.fail(std::string(label) + " does not map H_" + idx(k) + " into H_" + idx(k + step));
                return r;
            }
            PureHodge there = restrict_pure(d.fprime, d.fsecond, target, d.central_weight + k + step);
            Report m = check_morphism(f, here, there, step / 2);
            m.name = std::string(label) + " on H_" + idx(k) + ": " + m.name;
            r.add(std::move(m));
        }
    }
    return r;
}

Report check_sl2_polarization(const Sl2HodgeData& d, const SesquilinearForm& s)
{
    return polarization_side(d, s, false);
}

Report check_sl2_polarization_lowering(const Sl2HodgeData& d, const SesquilinearForm& s)
{
    return polarization_side(d, s, true);
}

bool check_equivalent_polarization_criterion(const Sl2HodgeData& d, const SesquilinearForm& s)
{
    Report raising = check_sl2_polarization(d, s);
    Report lowering = check_sl2_polarization_lowering(d, s);
    if (raising.passed != lowering.passed)
        throw CounterexampleAlarm("polarization criteria disagree: X side " +
                                  std::string(raising.passed ? "passes" : "fails (" + raising.witness + ")") +
                                  ", Y side " +
                                  std::string(lowering.passed ? "passes" : "fails (" + lowering.witness + ")"));
    return raising.passed;
}

std::pair<Sl2HodgeData, Matrix> bisl2_slice(const BiSl2HodgeData& d, int k, bool row)
{
    Grading outer = first_grading(d, row);
    Subspace v = graded_part(outer, k);
    Subquotient sq = Subquotient::of(v);
    const Sl2Triple& t = row ? d.second : d.first;
    Sl2HodgeData out;
    out.dim = sq.dim();
    out.fprime = induced_on_subquotient(d.fprime, sq);
    out.fsecond = induced_on_subquotient(d.fsecond, sq);
    out.central_weight = d.central_weight + k;
    out.triple = Sl2Triple{induced_map(t.x, sq, sq), induced_map(t.h, sq, sq), induced_map(t.y, sq, sq)};
    std::map<int, std::vector<Subspace>> collect;
    for (const auto& [key, piece] : d.bigrading)
        if ((row ? key.first : key.second) == k)
            collect[row ? key.second : key.first].push_back(sq.project(piece));
    for (const auto& [j, parts] : collect)
        out.grading.emplace(j, sum_of(parts, sq.dim()));
    return {out, sq.lifts()};
}

Report check_bisl2(const BiSl2HodgeData& d)
{
    Report r("bi-sl2-Hodge of central weight " + idx(d.central_weight));
    Grading all;
    int n = 0;
    for (const auto& entry : d.bigrading)
        all.emplace(n++, entry.second);
    try {
        validate_grading(all, d.dim);
    } catch (const InvalidStructure& e) {
        r.fail(std::string("bigrading: ") + e.what());
        return r;
    }
    for (const auto* t : {&d.first, &d.second}) {
        check_ambient("X", d.dim, t->x);
        check_ambient("H", d.dim, t->h);
        check_ambient("Y", d.dim, t->y);
        if (auto bad = sl2_relation_violation(*t); !bad.empty()) {
            r.fail((t == &d.first ? "first triple violates " : "second triple violates ") + bad);
            return r;
        }
    }
    const Matrix* a[] = {&d.first.x, &d.first.h, &d.first.y};
    const Matrix* b[] = {&d.second.x, &d.second.h, &d.second.y};
    const char* names[] = {"X", "H", "Y"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!commutator(*a[i], *b[j]).is_zero()) {
                r.fail(std::string("[") + names[i] + "1, " + names[j] + "2] != 0");
                return r;
            }
    if (!(d.first.h == grading_operator(first_grading(d, true), d.dim)) ||
        !(d.second.h == grading_operator(first_grading(d, false), d.dim))) {
        r.fail("H1, H2 are not the grading operators of the bigrading");
        return r;
    }
    for (bool row : {true, false}) {
        for (const auto& entry : first_grading(d, row)) {
            std::pair<Sl2HodgeData, Matrix> slice;
            try {
                slice = bisl2_slice(d, entry.first, row);
            } catch (const InvalidStructure& e) {
                r.fail(std::string(row ? "second" : "first") + " triple does not preserve the slice: " + e.what());
                return r;
            }
            Report part = check_sl2_hodge(slice.first);
            part.name = (row ? "row " : "column ") + idx(entry.first) + ": " + part.name;
            r.add(std::move(part));
        }
    }
    return r;
}

Report check_bisl2_polarization(const BiSl2HodgeData& d, const SesquilinearForm& s)
{
    if (s.target_twist != d.central_weight)
        throw ConventionError("bi-sl2 pairing takes values in C(" + idx(-s.target_twist) +
                              ") but the central weight is " + idx(d.central_weight));
    check_ambient("pairing Gram matrix", d.dim, s.gram);
    Report r("bi-sl2 polarization");
    r.add(check_bisl2(d));
    if (!r.passed)
        return r;
    Report adj("adjunction identities");
    check_adjunction(adj, d.first, s.gram, "1");
    if (adj.passed)
        check_adjunction(adj, d.second, s.gram, "2");
    r.add(std::move(adj));
    if (!r.passed)
        return r;
    Subspace kills = intersect(kernel(d.first.y), kernel(d.second.y));
    for (const auto& [key, piece] : d.bigrading) {
        auto [i, j] = key;
        if (i > 0 || j > 0)
            continue;
        Subspace prim = intersect(piece, kills);
        if (prim.is_zero())
            continue;
        int weight = d.central_weight + i + j;
        Matrix op = d.first.x.pow(static_cast<unsigned>(-i)) * d.second.x.pow(static_cast<unsigned>(-j));
        PureHodge pure = restrict_pure(d.fprime, d.fsecond, prim, weight);
        Report part =
            check_polarization(pure, SesquilinearForm{restricted_gram(op.transpose() * s.gram, prim.basis()), weight});
        part.name = "P1 P2 H_{" + idx(i) + "," + idx(j) + "} " + part.name;
        r.add(std::move(part));
    }
    return r;
}

MergeResult merge_bisl2(const BiSl2HodgeData& d, const std::optional<SesquilinearForm>& s)
{
    Report pre = check_bisl2(d);
    if (!pre.passed)
        throw InvalidStructure("not a bi-sl2-Hodge structure: " + pre.witness);
    if (s) {
        Report pol = check_bisl2_polarization(d, *s);
        if (!pol.passed)
            throw InvalidStructure("pairing does not polarize the bi-sl2-Hodge structure: " + pol.witness);
    }
    MergeResult out;
    Sl2HodgeData& m = out.merged;
    m.dim = d.dim;
    m.fprime = d.fprime;
    m.fsecond = d.fsecond;
    m.central_weight = d.central_weight;
    std::map<int, std::vector<Subspace>> total;
    for (const auto& [key, piece] : d.bigrading)
        total[key.first + key.second].push_back(piece);
    for (const auto& [k, parts] : total)
        m.grading.emplace(k, sum_of(parts, d.dim));
    m.triple = Sl2Triple{d.first.x + d.second.x, d.first.h + d.second.h, d.first.y + d.second.y};
    out.report = Report("merged sl2-Hodge structure");
    out.report.add(check_sl2_hodge(m));
    if (s)
        out.report.add(check_sl2_polarization(m, *s));
    if (!out.report.passed)
        throw CounterexampleAlarm("merged structure fails: " + out.report.witness);
    return out;
}

GradedLefschetz graded_lefschetz(const HodgeLefschetzData& d, const std::optional<SesquilinearForm>& s)
{
    check_ambient("N", d.dim, d.n);
    GradedLefschetz g;
    g.w = weight_filtration(d.n, d.central_weight);
    std::size_t offset = 0;
    for (int k : g.w.graded_indices()) {
        Subquotient sq = graded_piece(g.w, k);
        g.offsets.push_back(offset);
        offset += sq.dim();
        g.blocks.emplace_back(k, std::move(sq));
    }
    const std::size_t n = d.dim;
    Sl2HodgeData& data = g.data;
    data.dim = n;
    data.central_weight = d.central_weight;
    std::vector<DecreasingFiltration> fp;
    std::vector<DecreasingFiltration> fpp;
    std::vector<Matrix> embeds;
    Matrix lifts(0, n);
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        const auto& [k, sq] = g.blocks[b];
        fp.push_back(induced_on_subquotient(d.fprime, sq));
        fpp.push_back(induced_on_subquotient(d.fsecond, sq));
        embeds.push_back(embedding(sq.dim(), g.offsets[b], n));
        data.grading.emplace(k - d.central_weight, Subspace(n, embeds.back()));
        lifts = Matrix::vstack(lifts, sq.lifts());
    }
    data.fprime = direct_sum(fp, embeds, n);
    data.fsecond = direct_sum(fpp, embeds, n);
    Matrix y = graded_operator(g, d.n, -2);
    try {
        data.triple = complete_sl2(data.grading, y);
    } catch (const InvalidStructure& e) {
        g.failure = e.what();
        data.triple = Sl2Triple{Matrix::zero(n, n), grading_operator(data.grading, n), y};
    }
    if (s) {
        check_ambient("pairing Gram matrix", n, s->gram);
        Matrix full = n == 0 ? Matrix() : lifts * s->gram * lifts.adjoint();
        for (std::size_t a = 0; a < g.blocks.size(); ++a)
            for (std::size_t b = 0; b < g.blocks.size(); ++b)
                if (g.blocks[a].first + g.blocks[b].first != 2 * d.central_weight)
                    for (std::size_t r = 0; r < g.blocks[a].second.dim(); ++r)
                        for (std::size_t c = 0; c < g.blocks[b].second.dim(); ++c)
                            full(g.offsets[a] + r, g.offsets[b] + c) = Scalar(0);
        g.form = SesquilinearForm{full, s->target_twist};
    }
    return g;
}

Matrix graded_operator(const GradedLefschetz& g, const Matrix& op, int degree)
{
    const std::size_t n = op.rows();
    Matrix out(n, n);
    for (std::size_t a = 0; a < g.blocks.size(); ++a) {
        const auto& [k, src] = g.blocks[a];
        Subquotient dst = graded_piece(g.w, k + degree);
        Matrix piece = induced_map(op, src, dst);
        if (dst.dim() == 0)
            continue;
        std::size_t b = 0;
        while (g.blocks[b].first != k + degree)
            ++b;
        for (std::size_t r = 0; r < piece.rows(); ++r)
            for (std::size_t c = 0; c < piece.cols(); ++c)
                out(g.offsets[b] + r, g.offsets[a] + c) = piece(r, c);
    }
    return out;
}

Report check_hodge_lefschetz(const HodgeLefschetzData& d, const std::optional<SesquilinearForm>& s)
{
    if (s && s->target_twist != d.central_weight)
        throw ConventionError("Hodge-Lefschetz pairing takes values in C(" + idx(-s->target_twist) +
                              ") but the central weight is " + idx(d.central_weight));
    Report r("Hodge-Lefschetz of central weight " + idx(d.central_weight));
    GradedLefschetz g = graded_lefschetz(d, s);
    MixedHodge m{d.dim, d.fprime, d.fsecond, g.w};
    Report n_ok = check_morphism(d.n, m, m, -1);
    n_ok.name = "N: H -> H(-1)";

    Report mhs("mixed Hodge formulation");
    mhs.add(n_ok);
    mhs.add(check_mixed(m));
    Report grs("graded sl2 formulation");
    grs.add(n_ok);
    if (!g.failure.empty())
        grs.fail("gr N has no sl2 completion: " + g.failure);
    else
        grs.add(check_sl2_hodge(g.data));
    if (mhs.passed != grs.passed)
        throw CounterexampleAlarm("Hodge-Lefschetz formulations disagree: mixed " +
                                  std::string(mhs.passed ? "passes" : "fails") + ", graded " +
                                  std::string(grs.passed ? "passes" : "fails"));
    bool structure_ok = mhs.passed;
    r.add(std::move(mhs));
    r.add(std::move(grs));
    if (!s || !structure_ok)
        return r;

    Report pol("polarization");
    const Matrix& gram = s->gram;
    if (!gram.is_hermitian())
        pol.fail("Gram matrix is not hermitian");
    else if (!(d.n.transpose() * gram == gram * d.n.conj()))
        pol.fail("N is not self-adjoint: S(Nx, conj y) != S(x, conj(N y))");
    if (pol.passed) {
        for (std::size_t a = 0; a < g.blocks.size() && pol.passed; ++a) {
            for (std::size_t b = 0; b < g.blocks.size() && pol.passed; ++b) {
                int ka = g.blocks[a].first;
                int kb = g.blocks[b].first;
                if (ka + kb >= 2 * d.central_weight)
                    continue;
                Matrix block = g.blocks[a].second.lifts() * gram * g.blocks[b].second.lifts().adjoint();
                if (!block.is_zero())
                    pol.fail("S(W_" + idx(ka) + ", W_" + idx(kb) + ") != 0 although " + idx(ka) + " + " + idx(kb) +
                             " < 2w");
            }
        }
    }
    if (pol.passed) {
        Report on_gr = check_sl2_polarization(g.data, *g.form);
        on_gr.name = "on gr: " + on_gr.name;
        bool agreed = check_equivalent_polarization_criterion(g.data, *g.form);
        if (agreed != on_gr.passed)
            throw CounterexampleAlarm("polarization criterion changed verdict between runs");
        pol.add(std::move(on_gr));
    }
    r.add(std::move(pol));
    return r;
}

Report check_cone_polarization(const ConeData& c, std::size_t sample_budget, std::uint64_t seed)
{
    const int w = c.pairing.target_twist;
    Report r("cone polarization (sampled) of central weight " + idx(w));
    for (const auto& gen : c.generators)
        check_ambient("cone generator", c.dim, gen);
    for (std::size_t a = 0; a < c.generators.size(); ++a)
        for (std::size_t b = a + 1; b < c.generators.size(); ++b)
            if (!commutator(c.generators[a], c.generators[b]).is_zero()) {
                r.fail("generators N" + std::to_string(a + 1) + " and N" + std::to_string(b + 1) + " do not commute");
                return r;
            }
    // Only the open cone is sampled. A generator (k > 1) or a pairwise sum
    // (k > 2) lies on its boundary, where F need not induce a mixed structure
    // on gr^{W(N)}; those are replaced by the sum of all generators.
    std::vector<std::pair<std::string, Matrix>> samples;
    const std::size_t k = c.generators.size();
    if (k == 0) {
        samples.emplace_back("0", Matrix::zero(c.dim, c.dim));
    } else {
        Matrix all = Matrix::zero(c.dim, c.dim);
        std::string label;
        for (std::size_t a = 0; a < k; ++a) {
            all += c.generators[a];
            label += (a > 0 ? " + N" : "N") + std::to_string(a + 1);
        }
        samples.emplace_back(label, all);
        std::mt19937_64 rng(seed);
        for (std::size_t s = 0; s < sample_budget; ++s) {
            Matrix n = Matrix::zero(c.dim, c.dim);
            std::string label;
            for (std::size_t a = 0; a < k; ++a) {
                long num = static_cast<long>(rng() % 10) + 1;
                long den = static_cast<long>(rng() % 10) + 1;
                Scalar lambda = Scalar::frac(num, den);
                n += lambda * c.generators[a];
                if (a > 0)
                    label += " + ";
                label += scalar_label(lambda) + "*N" + std::to_string(a + 1);
            }
            samples.emplace_back(label, n);
        }
    }
    for (const auto& [label, n] : samples) {
        Report part("N = " + label);
        IncreasingFiltration wn = weight_filtration(n, w);
        if (!(wn == c.weightfil)) {
            std::set<int> keys;
            for (const auto& e : wn.jumps())
                keys.insert(e.first);
            for (const auto& e : c.weightfil.jumps())
                keys.insert(e.first);
            for (int key : keys)
                if (!(wn.at(key) == c.weightfil.at(key))) {
                    part.fail("(a) W(N)_" + idx(key) + " has dim " + std::to_string(wn.at(key).dim()) + ", W_" +
                              idx(key) + " has dim " + std::to_string(c.weightfil.at(key).dim()) +
                              (wn.at(key).dim() == c.weightfil.at(key).dim() ? " but they differ" : ""));
                    break;
                }
        } else {
            part.add(check_hodge_lefschetz(HodgeLefschetzData{c.dim, c.fprime, c.fsecond, w, n}, c.pairing));
        }
        r.add(std::move(part));
    }
    r.note("sampled " + std::to_string(samples.size()) + " elements of the cone (" + std::to_string(k) +
           " generators, seed " + std::to_string(seed) + "); not a proof over the open cone");
    if (k > 1)
        r.note("boundary points (single generators, partial sums) are not sampled");
    return r;
}

ReducedCone reduce_cone(const ConeData& c, int h, std::size_t sample_budget, std::uint64_t seed)
{
    if (c.generators.empty())
        throw InvalidStructure("reduce_cone needs at least one generator");
    Report pre = check_cone_polarization(c, sample_budget, seed);
    if (!pre.passed)
        throw InvalidStructure("input is not polarized by the cone: " + pre.witness);
    const int w = c.pairing.target_twist;
    const int k = w + h;
    GradedLefschetz g = graded_lefschetz(HodgeLefschetzData{c.dim, c.fprime, c.fsecond, w, c.generators[0]}, c.pairing);
    if (!g.failure.empty())
        throw CounterexampleAlarm("gr N1 has no sl2 completion on a cone-polarized input: " + g.failure);
    const Sl2Triple& t = g.data.triple;
    Subspace piece = graded_part(g.data.grading, h);

    ReducedCone out;
    out.relative_grade = h;
    out.report = Report("reduction at h = " + idx(h));
    Subspace prim;
    Matrix form;
    if (piece.ambient_dim() != 0) {
        if (h <= 0) {
            prim = intersect(kernel(t.y), piece);
            form = t.x.pow(static_cast<unsigned>(-h)).transpose() * g.form->gram;
        } else {
            prim = intersect(kernel(t.y.pow(static_cast<unsigned>(h + 1))), piece);
            form = t.y.pow(static_cast<unsigned>(h)).transpose() * g.form->gram;
            if (h % 2 != 0)
                form = -form;
        }
    }
    ConeData& r = out.structure;
    r.pairing.target_twist = k;
    if (prim.dim() == 0) {
        r.generators.assign(c.generators.size() - 1, Matrix());
        out.report.note("zero primitive part");
        return out;
    }
    Subquotient sq = Subquotient::of(prim);
    r.dim = sq.dim();
    r.fprime = induced_on_subquotient(g.data.fprime, sq);
    r.fsecond = induced_on_subquotient(g.data.fsecond, sq);
    r.pairing.gram = restricted_gram(form, prim.basis());

    std::size_t block = 0;
    while (g.blocks[block].first != k)
        ++block;
    const Subquotient& grk = g.blocks[block].second;
    Matrix embed = embedding(grk.dim(), g.offsets[block], c.dim);
    std::map<int, Subspace> steps;
    for (const auto& [j, step] : c.weightfil.jumps()) {
        Subspace in_block = grk.project(intersect(step, grk.sub()));
        Subspace in_gr = in_block.dim() == 0 ? Subspace::zero(c.dim) : Subspace(c.dim, in_block.basis() * embed);
        steps.emplace(j, sq.project(intersect(in_gr, prim)));
    }
    r.weightfil = IncreasingFiltration(r.dim, steps);
    for (std::size_t i = 1; i < c.generators.size(); ++i)
        r.generators.push_back(induced_map(graded_operator(g, c.generators[i], 0), sq, sq));

    Report post = check_cone_polarization(r, sample_budget, seed);
    if (!post.passed)
        throw CounterexampleAlarm("reduced structure at h = " + idx(h) + " is not cone-polarized: " + post.witness);
    out.report.add(std::move(post));
    return out;
}

Report reduce_cone_iterated(const ConeData& c, std::size_t sample_budget, std::uint64_t seed)
{
    const int w = c.pairing.target_twist;
    Report r("reduction with " + std::to_string(c.generators.size()) + " generators, central weight " + idx(w));
    if (c.generators.empty()) {
        PureHodge pure{c.dim, c.fprime, c.fsecond, w};
        if (!(c.weightfil == IncreasingFiltration::trivial(c.dim, w)))
            r.fail("leaf weight filtration is not concentrated in weight " + idx(w));
        r.add(check_pure(pure));
        r.add(check_polarization(pure, c.pairing));
        return r;
    }
    IncreasingFiltration w1 = weight_filtration(c.generators[0], w);
    for (int k : w1.graded_indices()) {
        ReducedCone red = reduce_cone(c, k - w, sample_budget, seed);
        if (red.structure.dim == 0)
            continue;
        Report sub = reduce_cone_iterated(red.structure, sample_budget, seed);
        sub.name = "h = " + idx(k - w) + ": " + sub.name;
        r.add(std::move(sub));
    }
    return r;
}

TwistedGraded twist_by_grading(const DecreasingFiltration& fprime, const DecreasingFiltration& fsecond,
                               const Grading& grading, const Matrix& raising)
{
    const std::size_t n = raising.rows();
    check_ambient("raising operator", n, raising);
    validate_grading(grading, n);
    TwistedGraded out;
    out.report = Report("summand-wise twist");
    std::vector<DecreasingFiltration> fp;
    std::vector<DecreasingFiltration> fpp;
    std::vector<Matrix> embeds;
    std::map<int, Subspace> wsteps;
    int jmin = 0;
    int jmax = 0;
    bool any = false;
    for (const auto& [j, piece] : grading) {
        if (piece.is_zero())
            continue;
        PureHodge here = restrict_pure(fprime, fsecond, piece, j);
        Report pure = check_pure(here);
        if (!pure.passed)
            throw InvalidStructure("H_" + idx(j) + " is not pure of weight " + idx(j) + ": " + pure.witness);
        Subspace target = graded_part(grading, j + 2);
        Matrix f;
        try {
            f = restricted_map(raising, piece, target);
        } catch (const InvalidStructure&) {
            throw InvalidStructure("raising operator does not map H_" + idx(j) + " into H_" + idx(j + 2));
        }
        Report morph = check_morphism(f, here, restrict_pure(fprime, fsecond, target, j + 2), 1);
        if (!morph.passed)
            throw InvalidStructure("raising operator is not a morphism H_" + idx(j) + " -> H_" + idx(j + 2) +
                                   "(1): " + morph.witness);
        fp.push_back(here.fprime.shifted(j));
        fpp.push_back(here.fsecond.shifted(j));
        embeds.push_back(piece.basis());
        Subspace upper = Subspace::zero(n);
        for (const auto& [j2, p2] : grading)
            if (j2 >= j)
                upper = sum(upper, p2);
        wsteps.emplace(-j, upper);
        jmin = any ? std::min(jmin, j) : j;
        jmax = any ? std::max(jmax, j) : j;
        any = true;
    }
    if ((jmin + jmax) % 2 != 0)
        throw InvalidStructure("grades " + idx(jmin) + " and " + idx(jmax) + " have no integral center");
    out.center = -(jmin + jmax) / 2;
    out.structure = MixedHodge{n, direct_sum(fp, embeds, n), direct_sum(fpp, embeds, n), IncreasingFiltration(n, wsteps)};
    out.lowering = raising;
    out.report.add(check_mixed(out.structure));
    Report morph = check_morphism(raising, out.structure, out.structure, -1);
    morph.name = "raising operator as map to the (-1)-twist";
    out.report.add(std::move(morph));
    if (!out.report.passed)
        throw CounterexampleAlarm("summand-wise twist failed: " + out.report.witness);
    return out;
}

Report lefschetz_ratio_positive(const Matrix& l, const Matrix& eta, const Subspace& src, const Subspace& dst)
{
    Report r("eigenvalues of L^-1 eta positive");
    Matrix lr = restricted_map(l, src, dst);
    Matrix er = restricted_map(eta, src, dst);
    if (!lr.is_square() || rank(lr) != lr.rows()) {
        r.fail("L is not bijective from the source to the target");
        return r;
    }
    Matrix ratio = inverse(lr) * er;
    Polynomial chi = characteristic_polynomial(ratio);
    std::string text;
    for (std::size_t i = chi.coeffs.size(); i > 0; --i)
        text += (i == chi.coeffs.size() ? "" : ", ") + chi.coeffs[i - 1].to_string();
    r.note("characteristic polynomial coefficients (leading first): " + text);
    auto roots = chi.is_real() ? rational_roots(chi) : std::vector<mpq_class>{};
    if (!roots.empty()) {
        std::string list;
        for (const auto& q : roots)
            list += (list.empty() ? "" : ", ") + q.get_str();
        r.note("rational eigenvalues: " + list);
    }
    if (!all_roots_positive_real(chi))
        r.fail("characteristic polynomial has a root that is not a positive real");
    return r;
}

} // namespace hodgecalc
