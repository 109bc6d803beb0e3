#pragma once

#include "hodgecalc/filtration.hpp"
#include "hodgecalc/report.hpp"

#include <map>

namespace hodgecalc {

/// Direct sum decomposition by integer grade; grades absent from the map are 0.
using Grading = std::map<int, Subspace>;

struct Sl2Triple {
    Matrix x;
    Matrix h;
    Matrix y;
};

bool is_nilpotent(const Matrix& a);
/// Smallest e with a^e = 0; throws InvalidStructure if a is not nilpotent.
unsigned nilpotency_index(const Matrix& a);

/// W(a) centered at `center`. The stored matrix is the honest nilpotent
/// endomorphism; the output is re-checked against the defining properties and
/// a failure raises CounterexampleAlarm.
IncreasingFiltration weight_filtration(const Matrix& a, int center);

/// a W_k ⊆ W_{k-2}, and a^k: gr_{c+k} -> gr_{c-k} bijective for all k >= 0.
Report check_weight_filtration(const Matrix& a, const IncreasingFiltration& w, int center);

Subspace graded_part(const Grading& g, int k);
/// Throws InvalidStructure unless the pieces form a direct sum equal to the space.
void validate_grading(const Grading& g, std::size_t dim);
/// Multiplication by k on grade k.
Matrix grading_operator(const Grading& g, std::size_t dim);

/// (X, H, Y) with Y = lowering and H the grading operator. X is built on the
/// strings Y^j v through the highest weight vectors; throws InvalidStructure
/// when the data does not come from an sl2 representation.
Sl2Triple complete_sl2(const Grading& g, const Matrix& lowering);

/// Empty string if the bracket relations hold, otherwise the first violated one.
std::string sl2_relation_violation(const Sl2Triple& t);

/// P H_{-k} = ker X^{k+1} ∩ H_{-k}; throws InvalidStructure if it differs
/// from ker Y ∩ H_{-k}.
Subspace primitive_subspace(const Sl2Triple& t, const Grading& g, int k);

struct LefschetzPiece {
    int k = 0; // primitive grade is -k
    int j = 0; // power of X applied
    Subspace piece;
};

/// Pieces X^j P H_{-k}, 0 <= j <= k; throws InvalidStructure if they do
/// not decompose the space.
std::vector<LefschetzPiece> lefschetz_decomposition(const Sl2Triple& t, const Grading& g);

/// X^k: H_{-k} -> H_k bijective for every k >= 0.
Report hard_lefschetz(const Sl2Triple& t, const Grading& g);

} // namespace hodgecalc
