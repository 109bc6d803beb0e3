#pragma once

#include "hodgecalc/filtration.hpp"
#include "hodgecalc/report.hpp"

#include <map>
#include <utility>

namespace hodgecalc {

/// Pure structure of weight w: F' and F'' are w-opposed.
struct PureHodge {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    int weight = 0;
};

struct MixedHodge {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    IncreasingFiltration weightfil;
};

/// Gram matrix G[a][b] = S(e_a, conj(e_b)), so S(x, conj y) = x^T G conj(y).
/// Values live in C(-target_twist); the matrix is the trivialized form.
struct SesquilinearForm {
    Matrix gram;
    int target_twist = 0;
};

/// Antilinear involution x -> J conj(x).
struct RealStructureWitness {
    Matrix j;
};

/// S(x, conj y) in the convention above.
Scalar pair(const SesquilinearForm& s, const Vector& x, const Vector& y);

/// View of a pure structure as mixed, W jumping once at the weight.
MixedHodge as_mixed(const PureHodge& h);

/// Pieces H^{p, w-p}; throws InvalidStructure if the filtrations are not opposed.
std::vector<std::pair<int, Subspace>> hodge_decomposition(const PureHodge& h);

/// Passes iff F', F'' are w-opposed. Notes list h^{p,q}.
Report check_pure(const PureHodge& h);
/// Passes iff every gr_k^W is pure of weight k.
Report check_mixed(const MixedHodge& h);
/// J conj(J) = I and F''^p = J conj(F'^p) for every p.
Report check_real_structure(const PureHodge& h, const RealStructureWitness& r);

/// H(l): filtration indices move down by l, weights by 2l.
PureHodge tate_twist(const PureHodge& h, int l);
MixedHodge tate_twist(const MixedHodge& h, int l);
/// The pairing on H(l) induced by s on H: target twist w - 2l, Gram (-1)^l G.
SesquilinearForm twist_form(const SesquilinearForm& s, int l);

/// Multiplication by (-1)^q on H^{p,q}. Throws InvalidStructure if not pure.
Matrix deligne_weil(const PureHodge& h);

/// Whether f is a filtered map src -> dst(twist):
/// f F^p ⊆ F^{p+twist}(dst) for both F, and f W_k ⊆ W_{k+2 twist}(dst).
Report check_morphism(const Matrix& f, const MixedHodge& src, const MixedHodge& dst, int twist);
Report check_morphism(const Matrix& f, const PureHodge& src, const PureHodge& dst, int twist);

/// (a) G hermitian, (b) distinct H^{p,q} orthogonal, (c) S(C_D x, conj y)
/// positive definite. Throws ConventionError if s.target_twist != weight.
Report check_polarization(const PureHodge& h, const SesquilinearForm& s);

/// Gram of (x, y) -> S(x, conj y) restricted to a subspace (rows of basis).
Matrix restricted_gram(const Matrix& gram, const Matrix& basis);

} // namespace hodgecalc
