#pragma once

#include "hodgecalc/sl2hodge.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hodgecalc::harness {

/// V(m) with lowest Hodge type (p, q): basis e_0..e_m, e_j in grade -m+2j
/// of type (p+j, q+j). The pairing is S(e_j, conj e_{m-j}) = (-1)^q * scale.
struct IrrepSpec {
    int m = 0;
    int p = 0;
    int q = 0;
    long scale = 1; // > 0 for a polarization
};

struct PolarizedSl2 {
    Sl2HodgeData data;
    SesquilinearForm form;
};

struct PolarizedBiSl2 {
    BiSl2HodgeData data;
    SesquilinearForm form;
};

PolarizedSl2 irrep(const IrrepSpec& spec);
/// Block sum; all summands must share the central weight.
PolarizedSl2 direct_sum(const std::vector<PolarizedSl2>& parts);
/// Tensor product: the first factor's triple acts as X1, H1, Y1.
PolarizedBiSl2 tensor(const PolarizedSl2& a, const PolarizedSl2& b);
PolarizedBiSl2 direct_sum(const std::vector<PolarizedBiSl2>& parts);

/// Random P = L U with unitriangular L, U over Z[i]; P^-1 is integral too.
Matrix unimodular(std::size_t n, std::mt19937_64& rng);

/// Transport along v -> P v: operators conjugate, subspaces map, and the
/// Gram matrix becomes P^-T G conj(P^-1).
Subspace transport(const Subspace& s, const Matrix& p);
DecreasingFiltration transport(const DecreasingFiltration& f, const Matrix& p);
IncreasingFiltration transport(const IncreasingFiltration& f, const Matrix& p);
Matrix transport_operator(const Matrix& a, const Matrix& p, const Matrix& p_inv);
Matrix transport_gram(const Matrix& g, const Matrix& p_inv);

PolarizedSl2 scramble(const PolarizedSl2& f, const Matrix& p);
PolarizedBiSl2 scramble(const PolarizedBiSl2& f, const Matrix& p);
ConeData scramble(const ConeData& c, const Matrix& p);

/// Generators Y1, Y2 and W from the total grading: W_{w+t} = ⊕_{i+j <= t} H_{i,j}.
ConeData cone_from_bisl2(const PolarizedBiSl2& f);

/// Direct sum of irreps in scrambled coordinates. Central weights must agree.
PolarizedSl2 generate_polarized_fixture(std::uint64_t seed, const std::vector<IrrepSpec>& spec);
/// Direct sum of tensor products of irrep pairs, scrambled.
PolarizedBiSl2 generate_polarized_bisl2(std::uint64_t seed,
                                        const std::vector<std::pair<IrrepSpec, IrrepSpec>>& spec);

/// A random valid bi-sl2 spec with total dimension at most max_dim.
std::vector<std::pair<IrrepSpec, IrrepSpec>> random_bisl2_spec(std::mt19937_64& rng, std::size_t max_dim);

/// Q^2 ⊗ V(1) ⊗ V(1) with eta0 = X on the middle factor, L = X on the last
/// factor and eta_{-2} = (M ⊗ I) ⊗ X. src/dst are the pieces H_{i,-1}, H_{i,1}.
struct LefschetzRatioFixture {
    PolarizedBiSl2 bisl2; // (eta0, L)
    Matrix l;
    Matrix eta_minus2;
    std::vector<std::pair<Subspace, Subspace>> pieces;
};
LefschetzRatioFixture lefschetz_ratio_fixture(const Matrix& m);

} // namespace hodgecalc::harness
