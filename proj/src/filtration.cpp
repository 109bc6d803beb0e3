#include "hodgecalc/filtration.hpp"

#include "hodgecalc/errors.hpp"

#include <iterator>
#include <set>
#include <string>

namespace hodgecalc {

namespace {

void check_ambient(std::size_t ambient, const Subspace& s)
{
    if (s.ambient_dim() != ambient)
        throw DimensionError("filtration step has ambient dimension " + std::to_string(s.ambient_dim()) +
                             ", expected " + std::to_string(ambient));
}

} // namespace

DecreasingFiltration::DecreasingFiltration(std::size_t ambient_dim, const std::map<int, Subspace>& steps)
    : ambient_(ambient_dim)
{
    if (ambient_ == 0)
        return;
    if (steps.empty())
        throw InvalidStructure("decreasing filtration without steps on a nonzero space");
    // Walk downwards; each step must contain the one above it.
    Subspace above = Subspace::zero(ambient_);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        check_ambient(ambient_, it->second);
        if (!it->second.contains(above))
            throw InvalidStructure("F^" + std::to_string(it->first) + " does not contain the next step");
        if (!(it->second == above))
            jumps_.emplace(it->first, it->second);
        above = it->second;
    }
    if (!above.is_full())
        throw InvalidStructure("lowest step of a decreasing filtration is not the whole space");
}

DecreasingFiltration DecreasingFiltration::trivial(std::size_t ambient_dim, int index)
{
    return DecreasingFiltration(ambient_dim, {{index, Subspace::full(ambient_dim)}});
}

Subspace DecreasingFiltration::at(int p) const
{
    auto it = jumps_.lower_bound(p);
    if (it == jumps_.end())
        return Subspace::zero(ambient_);
    return it->second;
}

int DecreasingFiltration::top() const { return jumps_.empty() ? 0 : jumps_.rbegin()->first; }

int DecreasingFiltration::bottom() const { return jumps_.empty() ? 0 : jumps_.begin()->first; }

DecreasingFiltration DecreasingFiltration::shifted(int shift) const
{
    DecreasingFiltration out;
    out.ambient_ = ambient_;
    for (const auto& [p, s] : jumps_)
        out.jumps_.emplace(p - shift, s);
    return out;
}

IncreasingFiltration::IncreasingFiltration(std::size_t ambient_dim, const std::map<int, Subspace>& steps)
    : ambient_(ambient_dim)
{
    if (ambient_ == 0)
        return;
    if (steps.empty())
        throw InvalidStructure("increasing filtration without steps on a nonzero space");
    Subspace below = Subspace::zero(ambient_);
    for (const auto& [k, s] : steps) {
        check_ambient(ambient_, s);
        if (!s.contains(below))
            throw InvalidStructure("W_" + std::to_string(k) + " does not contain the previous step");
        if (!(s == below))
            jumps_.emplace(k, s);
        below = s;
    }
    if (!below.is_full())
        throw InvalidStructure("highest step of an increasing filtration is not the whole space");
}

IncreasingFiltration IncreasingFiltration::trivial(std::size_t ambient_dim, int index)
{
    return IncreasingFiltration(ambient_dim, {{index, Subspace::full(ambient_dim)}});
}

Subspace IncreasingFiltration::at(int k) const
{
    auto it = jumps_.upper_bound(k);
    if (it == jumps_.begin())
        return Subspace::zero(ambient_);
    return std::prev(it)->second;
}

IncreasingFiltration IncreasingFiltration::shifted(int shift) const
{
    IncreasingFiltration out;
    out.ambient_ = ambient_;
    for (const auto& [k, s] : jumps_)
        out.jumps_.emplace(k - shift, s);
    return out;
}

std::vector<int> IncreasingFiltration::keys() const
{
    std::vector<int> out;
    for (const auto& entry : jumps_)
        out.push_back(entry.first);
    return out;
}

Subquotient graded_piece(const IncreasingFiltration& w, int k) { return Subquotient(w.at(k), w.at(k - 1)); }

DecreasingFiltration induced_on_subquotient(const DecreasingFiltration& f, const Subquotient& sq)
{
    if (f.ambient_dim() != sq.ambient_dim())
        throw DimensionError("induced filtration: ambient dimensions differ");
    std::map<int, Subspace> steps;
    if (sq.dim() == 0)
        return DecreasingFiltration(0, steps);
    for (const auto& entry : f.jumps())
        steps.emplace(entry.first, sq.project(intersect(entry.second, sq.sub())));
    return DecreasingFiltration(sq.dim(), steps);
}

DecreasingFiltration induced_on_subquotient(const DecreasingFiltration& f, const Subspace& sub,
                                            const Subspace& quot_by)
{
    if (!sub.contains(quot_by))
        throw InvalidStructure("induced filtration: quotient subspace is not inside the subspace");
    return induced_on_subquotient(f, Subquotient(sub, quot_by));
}

IncreasingFiltration induced_on_subquotient(const IncreasingFiltration& w, const Subquotient& sq)
{
    if (w.ambient_dim() != sq.ambient_dim())
        throw DimensionError("induced filtration: ambient dimensions differ");
    std::map<int, Subspace> steps;
    if (sq.dim() == 0)
        return IncreasingFiltration(0, steps);
    for (const auto& entry : w.jumps())
        steps.emplace(entry.first, sq.project(intersect(entry.second, sq.sub())));
    return IncreasingFiltration(sq.dim(), steps);
}

DecreasingFiltration direct_sum(const std::vector<DecreasingFiltration>& parts,
                                const std::vector<Matrix>& embeddings, std::size_t ambient_dim)
{
    if (parts.size() != embeddings.size())
        throw DimensionError("direct sum: one embedding per summand expected");
    std::set<int> indices;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        if (embeddings[s].rows() != parts[s].ambient_dim() || embeddings[s].cols() != ambient_dim)
            throw DimensionError("direct sum: embedding shape does not match summand");
        for (const auto& entry : parts[s].jumps())
            indices.insert(entry.first);
    }
    std::map<int, Subspace> steps;
    for (int p : indices) {
        Matrix rows(0, ambient_dim);
        for (std::size_t s = 0; s < parts.size(); ++s) {
            Subspace piece = parts[s].ambient_dim() == 0 ? Subspace() : parts[s].at(p);
            if (piece.dim() > 0)
                rows = Matrix::vstack(rows, piece.basis() * embeddings[s]);
        }
        steps.emplace(p, Subspace(ambient_dim, rows));
    }
    return DecreasingFiltration(ambient_dim, steps);
}

OpposednessResult is_w_opposed(const DecreasingFiltration& fp, const DecreasingFiltration& fpp, int w)
{
    if (fp.ambient_dim() != fpp.ambient_dim())
        throw DimensionError("opposedness: filtrations on different spaces");
    OpposednessResult out;
    const std::size_t n = fp.ambient_dim();
    if (n == 0) {
        out.opposed = true;
        return out;
    }
    Subspace span = Subspace::zero(n);
    for (int p = w - fpp.top(); p <= fp.top(); ++p) {
        Subspace piece = intersect(fp.at(p), fpp.at(w - p));
        if (piece.is_zero())
            continue;
        out.dim_sum += piece.dim();
        span = sum(span, piece);
        out.pieces.emplace_back(p, std::move(piece));
    }
    out.span_dim = span.dim();
    out.opposed = out.dim_sum == n && out.span_dim == n;
    return out;
}

} // namespace hodgecalc
