#pragma once

#include "hodgecalc/report.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace hodgecalc {

/// (-1)^{k(k-1)/2}.
int epsilon(long k);

/// A formal homogeneous element: a symbol with a multidegree and a sign.
struct FormalTerm {
    std::string symbol;
    std::vector<int> multidegree;
    int sign = 1;

    int total_degree() const;
};

/// Tensor of two terms; multidegrees add componentwise (shorter padded with 0).
FormalTerm tensor(const FormalTerm& a, const FormalTerm& b);

/// A named map on pairs of terms with a ±1 sign depending on their degrees.
struct SignRule {
    std::string name;
    std::function<int(const FormalTerm&, const FormalTerm&)> sign;

    FormalTerm apply(const FormalTerm& a, const FormalTerm& b) const;
};

/// The sign picked up by permuting terms into order[0], order[1], ...: each
/// adjacent transposition of x and y contributes (-1)^{deg x * deg y}.
int koszul_sign(const std::vector<FormalTerm>& terms, const std::vector<std::size_t>& order);

/// (a ⊗ b) ⊗ (c ⊗ d) -> (a ⊗ c) ⊗ (b ⊗ d) with a, b of degrees i, j and c, d
/// of degrees -i, -j. The returned sign is the reordering sign.
int pushforward_pairing_sign_model(int i, int j);

/// ε(i+j) = ε(i) ε(j) (-1)^{ij} for |i|, |j| <= bound.
Report check_epsilon_cocycle(int bound);
/// Model sign equals (-1)^{ij} and ε(i) ε(j) model = ε(i+j) for |i|, |j| <= bound.
Report check_pushforward_model(int bound);
/// Three composable pushforwards of relative degrees a, b, c: the interleaving
/// sign and the two stepwise bracketings give the same ε-corrected sign.
Report check_triple_composition(int bound);

/// Deligne's rule phi(α ⊗ β) = (-1)^{a n} α ⊗ β, with a the Godement degree of
/// α and n the complex degree of β.
int godement_phi_sign(int a, int n);

/// Signs of the two routes through the Godement comparison diagram for a
/// section α ⊗ β with α of outer/inner degree (i, j), β of (k, l).
struct GodementPaths {
    int top = 1;
    int bottom = 1;
    int defect() const { return top * bottom; }
};
GodementPaths godement_paths(int i, int j, int k, int l);
int godement_diagram_defect(int i, int j, int k, int l);

struct GodementRow {
    std::array<int, 4> degrees; // i, j, k, l
    int defect = 1;
};
/// All tuples 0 <= i, j, k, l <= box.
std::vector<GodementRow> godement_table(int box);
/// defect == (-1)^{il} on the box, and independent of (j, k).
Report check_godement(int box);

} // namespace hodgecalc
