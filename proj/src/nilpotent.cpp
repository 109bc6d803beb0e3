#include "hodgecalc/nilpotent.hpp"

#include "hodgecalc/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hodgecalc {

namespace {

std::string idx(int k) { return std::to_string(k); }

std::map<int, Subspace> weight_steps(const Matrix& a, int center)
{
    const std::size_t n = a.rows();
    std::map<int, Subspace> steps;
    if (n == 0)
        return steps;
    if (a.is_zero()) {
        steps.emplace(center, Subspace::full(n));
        return steps;
    }
    unsigned m = nilpotency_index(a) - 1;
    Matrix am = a.pow(m);
    Subspace top = kernel(am);
    Subspace bottom = image(am);
    int mi = static_cast<int>(m);
    steps.emplace(center - mi, bottom);
    steps.emplace(center + mi, Subspace::full(n));
    // The middle subquotient ker a^m / im a^m carries a nilpotent of smaller index.
    Subquotient middle(top, bottom);
    std::map<int, Subspace> inner;
    if (middle.dim() > 0)
        inner = weight_steps(induced_map(a, middle, middle), center);
    for (int k = center - mi + 1; k <= center + mi - 1; ++k) {
        Matrix rows = bottom.basis();
        auto it = inner.upper_bound(k);
        if (it != inner.begin()) {
            const Subspace& s = std::prev(it)->second;
            if (s.dim() > 0)
                rows = Matrix::vstack(rows, s.basis() * middle.lifts());
        }
        steps.emplace(k, Subspace(n, rows));
    }
    return steps;
}

} // namespace

bool is_nilpotent(const Matrix& a)
{
    if (!a.is_square())
        throw DimensionError("nilpotency test on a non-square matrix");
    return a.pow(static_cast<unsigned>(a.rows())).is_zero();
}

unsigned nilpotency_index(const Matrix& a)
{
    if (!is_nilpotent(a))
        throw InvalidStructure("operator is not nilpotent");
    Matrix p = Matrix::identity(a.rows());
    unsigned e = 0;
    while (!p.is_zero()) {
        p = p * a;
        ++e;
    }
    return e;
}

IncreasingFiltration weight_filtration(const Matrix& a, int center)
{
    if (!is_nilpotent(a))
        throw InvalidStructure("weight filtration of a non-nilpotent operator");
    IncreasingFiltration w(a.rows(), weight_steps(a, center));
    Report r = check_weight_filtration(a, w, center);
    if (!r.passed)
        throw CounterexampleAlarm("weight filtration failed its defining property: " + r.witness);
    return w;
}

Report check_weight_filtration(const Matrix& a, const IncreasingFiltration& w, int center)
{
    Report r("W(N) centered at " + idx(center));
    if (a.rows() != w.ambient_dim() || !a.is_square())
        throw DimensionError("weight filtration and operator live on different spaces");
    for (const auto& [k, step] : w.jumps()) {
        for (const auto& v : step.basis_vectors()) {
            if (!w.at(k - 2).contains(a * v)) {
                r.fail("N W_" + idx(k) + " not inside W_" + idx(k - 2) + ": vector " + to_string(v));
                return r;
            }
        }
    }
    int reach = 0;
    for (const auto& entry : w.jumps())
        reach = std::max(reach, std::abs(entry.first - center) + 1);
    Matrix power = Matrix::identity(a.rows());
    for (int k = 0; k <= reach; ++k) {
        Subspace upper = w.at(center + k);
        Subspace upper_prev = w.at(center + k - 1);
        Subspace lower = w.at(center - k);
        Subspace lower_prev = w.at(center - k - 1);
        std::size_t dim_up = upper.dim() - upper_prev.dim();
        std::size_t dim_low = lower.dim() - lower_prev.dim();
        std::size_t image_dim = sum(apply(power, upper), lower_prev).dim() - lower_prev.dim();
        if (dim_up != dim_low || image_dim != dim_up) {
            r.fail("N^" + idx(k) + ": gr_" + idx(center + k) + " (dim " + std::to_string(dim_up) + ") -> gr_" +
                   idx(center - k) + " (dim " + std::to_string(dim_low) + ") has image of dim " +
                   std::to_string(image_dim));
            return r;
        }
        power = power * a;
    }
    return r;
}

Subspace graded_part(const Grading& g, int k)
{
    auto it = g.find(k);
    if (it == g.end()) {
        if (g.empty())
            return Subspace();
        return Subspace::zero(g.begin()->second.ambient_dim());
    }
    return it->second;
}

void validate_grading(const Grading& g, std::size_t dim)
{
    std::size_t total = 0;
    Subspace span = Subspace::zero(dim);
    for (const auto& [k, piece] : g) {
        if (piece.ambient_dim() != dim)
            throw DimensionError("graded piece " + idx(k) + " lives in the wrong ambient space");
        total += piece.dim();
        span = sum(span, piece);
    }
    if (total != dim || span.dim() != dim)
        throw InvalidStructure("grading does not decompose the space (pieces of total dimension " +
                               std::to_string(total) + ", span " + std::to_string(span.dim()) + ", dim " +
                               std::to_string(dim) + ")");
}

Matrix grading_operator(const Grading& g, std::size_t dim)
{
    validate_grading(g, dim);
    if (dim == 0)
        return Matrix();
    std::vector<Vector> columns;
    std::vector<Scalar> diag;
    for (const auto& [k, piece] : g) {
        for (const auto& v : piece.basis_vectors()) {
            columns.push_back(v);
            diag.emplace_back(k);
        }
    }
    Matrix basis = Matrix::from_columns(columns, dim);
    return basis * Matrix::diagonal(diag) * inverse(basis);
}

std::string sl2_relation_violation(const Sl2Triple& t)
{
    if (!(commutator(t.h, t.x) == Scalar(2) * t.x))
        return "[H,X] != 2X";
    if (!(commutator(t.h, t.y) == Scalar(-2) * t.y))
        return "[H,Y] != -2Y";
    if (!(commutator(t.x, t.y) == t.h))
        return "[X,Y] != H";
    return {};
}

Sl2Triple complete_sl2(const Grading& g, const Matrix& lowering)
{
    const std::size_t n = lowering.rows();
    if (!lowering.is_square())
        throw DimensionError("lowering operator is not square");
    validate_grading(g, n);
    for (const auto& [k, piece] : g) {
        Subspace target = graded_part(g, k - 2);
        for (const auto& v : piece.basis_vectors())
            if (!target.contains(lowering * v))
                throw InvalidStructure("lowering operator does not map grade " + idx(k) + " into grade " +
                                       idx(k - 2));
    }
    Sl2Triple t;
    t.y = lowering;
    t.h = grading_operator(g, n);
    if (n == 0) {
        t.x = Matrix();
        return t;
    }
    std::vector<Vector> string_vectors;
    std::vector<Vector> x_images;
    for (const auto& [k, piece] : g) {
        if (k < 0)
            continue;
        Subspace highest = intersect(kernel(lowering.pow(static_cast<unsigned>(k + 1))), piece);
        for (const auto& v : highest.basis_vectors()) {
            Vector cur = v;
            Vector prev(n);
            for (int j = 0; j <= k; ++j) {
                string_vectors.push_back(cur);
                x_images.push_back(scaled(prev, Scalar(static_cast<long>(j) * (k - j + 1))));
                prev = cur;
                cur = lowering * cur;
            }
        }
    }
    if (string_vectors.size() != n || rank(Matrix::from_rows(string_vectors, n)) != n)
        throw InvalidStructure("strings through highest weight vectors do not form a basis; no sl2 completion");
    Matrix basis = Matrix::from_columns(string_vectors, n);
    t.x = Matrix::from_columns(x_images, n) * inverse(basis);
    if (auto bad = sl2_relation_violation(t); !bad.empty())
        throw InvalidStructure("completed triple violates " + bad);
    return t;
}

Subspace primitive_subspace(const Sl2Triple& t, const Grading& g, int k)
{
    if (k < 0)
        throw InvalidStructure("primitive subspace needs k >= 0");
    Subspace piece = graded_part(g, -k);
    if (piece.ambient_dim() == 0)
        return piece;
    Subspace via_x = intersect(kernel(t.x.pow(static_cast<unsigned>(k + 1))), piece);
    Subspace via_y = intersect(kernel(t.y), piece);
    if (!(via_x == via_y))
        throw InvalidStructure("ker X^" + idx(k + 1) + " and ker Y differ on grade " + idx(-k));
    return via_x;
}

std::vector<LefschetzPiece> lefschetz_decomposition(const Sl2Triple& t, const Grading& g)
{
    std::vector<LefschetzPiece> out;
    const std::size_t n = t.x.rows();
    std::size_t total = 0;
    Subspace span = Subspace::zero(n);
    for (const auto& [grade, piece] : g) {
        if (grade > 0)
            continue;
        int k = -grade;
        Subspace prim = primitive_subspace(t, g, k);
        for (int j = 0; j <= k; ++j) {
            Subspace image = apply(t.x.pow(static_cast<unsigned>(j)), prim);
            total += image.dim();
            span = sum(span, image);
            out.push_back({k, j, std::move(image)});
        }
    }
    if (total != n || span.dim() != n)
        throw InvalidStructure("Lefschetz pieces do not decompose the space");
    return out;
}

Report hard_lefschetz(const Sl2Triple& t, const Grading& g)
{
    Report r("hard Lefschetz");
    std::set<int> grades;
    for (const auto& entry : g)
        grades.insert(std::abs(entry.first));
    for (int k : grades) {
        Subspace low = graded_part(g, -k);
        Subspace high = graded_part(g, k);
        Subspace image = apply(t.x.pow(static_cast<unsigned>(k)), low);
        if (low.dim() != high.dim() || image.dim() != low.dim() || !high.contains(image)) {
            r.fail("X^" + idx(k) + ": H_" + idx(-k) + " (dim " + std::to_string(low.dim()) + ") -> H_" + idx(k) +
                   " (dim " + std::to_string(high.dim()) + ") has rank " + std::to_string(image.dim()));
            return r;
        }
    }
    return r;
}

} // namespace hodgecalc
