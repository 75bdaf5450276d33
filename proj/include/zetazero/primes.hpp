#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zetazero/precision.hpp"
#include "zetazero/solver.hpp"
#include "zetazero/special_functions.hpp"

namespace zetazero {

// Sampled reconstruction of the prime-counting functions from a finite set
// of zeros, next to the exact sieve staircases.
struct PrimeReconstruction {
    std::vector<double> xs;
    std::vector<double> j_vals;
    std::vector<double> pi_vals;
    std::vector<double> psi_vals;
    std::vector<double> pi_true;
    std::vector<double> psi_true;
    int zero_count = 0;
};

// J(x) = Li(x) - sum_rho Ei(rho log x) + int_x^inf dt/(t(t^2-1) log t) - log 2,
// truncated to the supplied zeros (each contributes rho and its conjugate).
Real j_from_zeros(double x, const std::vector<ZeroRecord>& zeros, const PrecisionContext& ctx);

// Moebius inversion pi(x) = sum_n mu(n)/n J(x^{1/n}); the sum stops at the
// first n with x^{1/n} < 2.
double pi_from_j(double x, const std::function<double(double)>& j,
                 const ArithmeticFunctionTable& tables);

// psi(x) = x - sum_rho x^rho/rho - log(2 pi) - (1/2) log(1 - x^-2).
Real psi_from_zeros(double x, const std::vector<ZeroRecord>& zeros, const PrecisionContext& ctx);

// Exact staircase oracles by direct summation over the sieve tables.
std::uint64_t pi_oracle(double x, const ArithmeticFunctionTable& tables);
double j_oracle(double x, const ArithmeticFunctionTable& tables);
double psi_oracle(double x, const ArithmeticFunctionTable& tables);

// Tail term int_x^inf dt / (t (t^2 - 1) log t).
double j_tail_integral(double x);

enum class ZeroSource { lambert_seed, solved };

// Samples J, pi, psi reconstructions over [x_lo, x_hi] with the first
// `zero_count` zeros, either closed-form seed ordinates or solved ones.
PrimeReconstruction reconstruct_figure(double x_lo, double x_hi, int samples, int zero_count,
                                       ZeroSource source, const std::vector<ZeroRecord>& solved,
                                       const ArithmeticFunctionTable& tables,
                                       const PrecisionContext& ctx);

}  // namespace zetazero
