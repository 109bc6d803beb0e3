#pragma once

#include "hodgecalc/hodge.hpp"
#include "hodgecalc/nilpotent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace hodgecalc {

/// Grade k carries a pure structure of weight w + k; X and Y are morphisms
/// H_k -> H_{k+2}(1) and H_k -> H_{k-2}(-1).
struct Sl2HodgeData {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    int central_weight = 0;
    Grading grading;
    Sl2Triple triple;
};

using Bigrading = std::map<std::pair<int, int>, Subspace>;

struct BiSl2HodgeData {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    int central_weight = 0;
    Bigrading bigrading;
    Sl2Triple first;
    Sl2Triple second;
};

struct HodgeLefschetzData {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    int central_weight = 0;
    Matrix n;
};

/// A mixed structure with a pairing and commuting nilpotent generators.
/// The central weight is the pairing's target twist.
struct ConeData {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    IncreasingFiltration weightfil;
    SesquilinearForm pairing;
    std::vector<Matrix> generators;
};

/// Induced pure structure on a subspace of the ambient space, in the
/// coordinates of its canonical basis.
PureHodge restrict_pure(const DecreasingFiltration& fprime, const DecreasingFiltration& fsecond,
                        const Subspace& sub, int weight);

Report check_sl2_hodge(const Sl2HodgeData& d);

/// Adjunction identities S(Hx,ȳ) = -S(x,conj Hy), S(Xx,ȳ) = S(x,conj Xy),
/// S(Yx,ȳ) = S(x,conj Yy), then S(X^k x, ȳ) polarizes P H_{-k} for k >= 0.
/// Throws ConventionError if the pairing is not valued in C(-w).
Report check_sl2_polarization(const Sl2HodgeData& d, const SesquilinearForm& s);

/// Same identities, then (-1)^k S(Y^k x, ȳ) polarizes P H_k = ker Y^{k+1} ∩ H_k.
Report check_sl2_polarization_lowering(const Sl2HodgeData& d, const SesquilinearForm& s);

/// Runs both criteria; they must agree whenever d passes check_sl2_hodge
/// (CounterexampleAlarm otherwise). Returns the shared verdict.
bool check_equivalent_polarization_criterion(const Sl2HodgeData& d, const SesquilinearForm& s);

/// The grade-k row ⊕_j H_{k,j} (first = true) with the second triple, or the
/// grade-k column ⊕_i H_{i,k} with the first triple, in row coordinates.
/// Also returns the coordinate basis used (rows in the ambient space).
std::pair<Sl2HodgeData, Matrix> bisl2_slice(const BiSl2HodgeData& d, int k, bool row);

Report check_bisl2(const BiSl2HodgeData& d);
/// S(X1^i X2^j x, ȳ) polarizes P1 P2 H_{-i,-j} for all i, j >= 0.
Report check_bisl2_polarization(const BiSl2HodgeData& d, const SesquilinearForm& s);

struct MergeResult {
    Sl2HodgeData merged;
    Report report;
};

/// (X1+X2, H1+H2, Y1+Y2) with the total grading. Throws InvalidStructure if
/// the input is not a (polarized) bi-sl2-Hodge structure, CounterexampleAlarm
/// if the output fails.
MergeResult merge_bisl2(const BiSl2HodgeData& d, const std::optional<SesquilinearForm>& s);

/// gr^{W(N)} of a Hodge-Lefschetz structure, in block coordinates: the basis
/// of the gr space is the concatenation of the lifts of gr_k, k ascending.
struct GradedLefschetz {
    IncreasingFiltration w;                 // W(N) on the original space
    std::vector<std::pair<int, Subquotient>> blocks; // absolute index k
    std::vector<std::size_t> offsets;
    Sl2HodgeData data;                      // grading k - w, Y = gr N
    std::optional<SesquilinearForm> form;   // induced pairing on gr
    std::string failure;                    // nonempty if the sl2 completion failed
};

GradedLefschetz graded_lefschetz(const HodgeLefschetzData& d, const std::optional<SesquilinearForm>& s);

/// Matrix on the gr space induced by op, which must carry W_k into
/// W_{k+degree}. Block k goes to block k + degree.
Matrix graded_operator(const GradedLefschetz& g, const Matrix& op, int degree);

/// MHS formulation and gr-sl2 formulation, which must agree; with a pairing,
/// also the polarization conditions. Throws ConventionError if the pairing's
/// target twist is not the central weight.
Report check_hodge_lefschetz(const HodgeLefschetzData& d, const std::optional<SesquilinearForm>& s);

/// Samples the open cone: the sum of all generators (the generator itself
/// for k = 1, the pairwise sum for k = 2) and sample_budget random positive
/// combinations. Each sample must have W(N) = W and be polarized
/// Hodge-Lefschetz.
Report check_cone_polarization(const ConeData& c, std::size_t sample_budget, std::uint64_t seed);

struct ReducedCone {
    ConeData structure;
    int relative_grade = 0;
    Report report;
};

/// P_{N1} gr_{w+h}^{W(N1)} with induced filtrations, W, pairing and the
/// remaining generators. h is the grade relative to the central weight.
/// Throws InvalidStructure if the input does not pass the cone check;
/// CounterexampleAlarm if the output does not.
ReducedCone reduce_cone(const ConeData& c, int h, std::size_t sample_budget = 5, std::uint64_t seed = 0);

/// Reduces recursively until no generators remain; every leaf must be a pure
/// polarized structure.
Report reduce_cone_iterated(const ConeData& c, std::size_t sample_budget = 5, std::uint64_t seed = 0);

/// Summand-wise Tate twist of a graded structure H = ⊕ H_j (H_j of weight j):
/// F~^p = ⊕_j F^{p+j} ∩ H_j, so H_j gets weight -j and the raising operator
/// becomes a map to the (-1)-twist.
struct TwistedGraded {
    MixedHodge structure; // W_k = ⊕_{-j <= k} H_j
    Matrix lowering;
    int center = 0;       // central weight of the twisted structure
    Report report;
};

TwistedGraded twist_by_grading(const DecreasingFiltration& fprime, const DecreasingFiltration& fsecond,
                               const Grading& grading, const Matrix& raising);

/// All eigenvalues of l^{-1} eta on src are positive reals, where l and eta
/// both map src to dst and l is bijective there.
Report lefschetz_ratio_positive(const Matrix& l, const Matrix& eta, const Subspace& src, const Subspace& dst);

} // namespace hodgecalc
