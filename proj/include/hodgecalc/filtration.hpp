#pragma once

#include "hodgecalc/subspace.hpp"

#include <map>
#include <vector>

namespace hodgecalc {

/// Decreasing filtration F^p of Q(i)^n, stored by jump indices: only the
/// indices p with F^p != F^{p+1} are kept. A lookup at p returns the stored
/// step at the nearest kept index >= p, and 0 above all of them. The lowest
/// kept step is the whole space, so queries below the support clamp to it.
class DecreasingFiltration {
public:
    DecreasingFiltration() = default;
    /// Steps may be given at any indices; missing ones inherit from the
    /// nearest given index above. Throws InvalidStructure if the steps are
    /// not nested or the lowest one is not the whole space.
    DecreasingFiltration(std::size_t ambient_dim, const std::map<int, Subspace>& steps);

    /// F^p = whole space for p <= index, 0 above.
    static DecreasingFiltration trivial(std::size_t ambient_dim, int index);

    std::size_t ambient_dim() const { return ambient_; }
    Subspace at(int p) const;
    const std::map<int, Subspace>& jumps() const { return jumps_; }
    /// Largest p with F^p != 0 (meaningless for the zero space).
    int top() const;
    /// Largest p with F^p = whole space.
    int bottom() const;

    /// Re-indexes: result.at(p) == at(p + shift).
    DecreasingFiltration shifted(int shift) const;

    friend bool operator==(const DecreasingFiltration&, const DecreasingFiltration&) = default;

private:
    std::size_t ambient_ = 0;
    std::map<int, Subspace> jumps_;
};

/// Increasing filtration W_k, stored by the indices k with W_k != W_{k-1}.
/// A lookup returns the stored step at the nearest kept index <= k, and 0
/// below all of them; the highest kept step is the whole space.
class IncreasingFiltration {
public:
    IncreasingFiltration() = default;
    IncreasingFiltration(std::size_t ambient_dim, const std::map<int, Subspace>& steps);

    /// W_k = 0 for k < index, whole space from index on.
    static IncreasingFiltration trivial(std::size_t ambient_dim, int index);

    std::size_t ambient_dim() const { return ambient_; }
    Subspace at(int k) const;
    const std::map<int, Subspace>& jumps() const { return jumps_; }

    /// result.at(k) == at(k + shift).
    IncreasingFiltration shifted(int shift) const;

    /// Indices k with gr_k != 0, ascending.
    std::vector<int> graded_indices() const { return keys(); }

    friend bool operator==(const IncreasingFiltration&, const IncreasingFiltration&) = default;

private:
    std::vector<int> keys() const;

    std::size_t ambient_ = 0;
    std::map<int, Subspace> jumps_;
};

/// gr_k = W_k / W_{k-1} with chosen lifts; zero-dimensional pieces are legal.
Subquotient graded_piece(const IncreasingFiltration& w, int k);

/// Step p is the image of F^p ∩ sub in sub/quot_by, in the coordinates of
/// the returned subquotient.
DecreasingFiltration induced_on_subquotient(const DecreasingFiltration& f, const Subquotient& sq);
DecreasingFiltration induced_on_subquotient(const DecreasingFiltration& f, const Subspace& sub,
                                            const Subspace& quot_by);
IncreasingFiltration induced_on_subquotient(const IncreasingFiltration& w, const Subquotient& sq);

/// Direct sum of filtrations living on the summands of a decomposition
/// Q(i)^n = ⊕ embed_s(Q(i)^{d_s}); embeddings[s] has d_s rows (the images of
/// the summand basis vectors).
DecreasingFiltration direct_sum(const std::vector<DecreasingFiltration>& parts,
                                const std::vector<Matrix>& embeddings, std::size_t ambient_dim);

struct OpposednessResult {
    bool opposed = false;
    /// (p, H^{p, w-p}) for every p with a nonzero piece.
    std::vector<std::pair<int, Subspace>> pieces;
    std::size_t dim_sum = 0;
    std::size_t span_dim = 0;
};

/// F' and F'' are w-opposed iff the pieces F'^p ∩ F''^{w-p} span the space
/// and their dimensions add up to its dimension.
OpposednessResult is_w_opposed(const DecreasingFiltration& fp, const DecreasingFiltration& fpp, int w);

} // namespace hodgecalc
