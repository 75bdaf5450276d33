#pragma once

#include "zetazero/real.hpp"

namespace zetazero {

// Exact rational Bernoulli data, cached process-wide. The cache is built
// under a lock and only grows; readers always see fully constructed entries.

// B_{2j} / (2j)!  (j >= 1), the Euler-Maclaurin tail coefficients.
Real bernoulli_over_factorial(int j, mpfr_prec_t prec);

// B_{2j} / (2j (2j-1))  (j >= 1), the Stirling-series coefficients.
Real bernoulli_stirling_coeff(int j, mpfr_prec_t prec);

// B_{2j} itself, for tests.
Real bernoulli_number(int j, mpfr_prec_t prec);

}  // namespace zetazero
