#pragma once

#include "hodgecalc/filtration.hpp"

#include <random>
#include <vector>

namespace hodgecalc::harness {

/// W(a) by exhaustive search. Candidates for each step come from the lattice
/// generated by ker a^i and im a^j under sum and intersection; the steps are
/// chosen outside in and every chain satisfying both defining properties is
/// collected. Exponential; meant for dim <= 6. Throws CounterexampleAlarm
/// if the number of solutions is not exactly one.
IncreasingFiltration oracle_weight_filtration(const Matrix& a, int center);

/// The subspace lattice the oracle searches, sorted by dimension.
std::vector<Subspace> oracle_lattice(const Matrix& a);

/// Every strictly upper triangular n x n matrix with entries in {0, 1, -1},
/// for n = 1..max_dim.
std::vector<Matrix> small_nilpotent_family(std::size_t max_dim);

/// A random nilpotent of dimension n: a Jordan form for a random partition,
/// conjugated by a random unimodular matrix.
Matrix random_nilpotent(std::size_t n, std::mt19937_64& rng);

} // namespace hodgecalc::harness
