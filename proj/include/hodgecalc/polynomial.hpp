#pragma once

#include "hodgecalc/matrix.hpp"

#include <vector>

namespace hodgecalc {

/// Polynomial with Q(i) coefficients, coeffs[k] multiplies t^k.
struct Polynomial {
    std::vector<Scalar> coeffs;

    int degree() const;
    bool is_real() const;
    Scalar operator()(const Scalar& t) const;
};

/// det(t*I - m), via Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);

/// True iff the polynomial is non-constant, has real coefficients and all of
/// its complex roots are real and strictly positive (Sturm count on the
/// squarefree part).
bool all_roots_positive_real(const Polynomial& p);

/// Distinct rational roots (real polynomials only), ascending.
std::vector<mpq_class> rational_roots(const Polynomial& p);

} // namespace hodgecalc
