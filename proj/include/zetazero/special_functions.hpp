#pragma once

#include <cstdint>
#include <vector>

#include "zetazero/complexhp.hpp"
#include "zetazero/precision.hpp"

namespace zetazero {

// log Gamma(z), analytic branch on the right half-plane (real on the
// positive real axis, continuous everywhere Re z > 0). Computed from the
// Stirling series after an integer shift, so the imaginary part is the
// unwrapped arg Gamma. For Re z <= 0 the reflection formula is applied;
// only the right half-plane branch is part of the contract.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);

// theta(t) = arg Gamma(1/4 + i t/2) - t log sqrt(pi), continuous with
// theta(0) = 0.
Real riemann_siegel_theta(const Real& t, const PrecisionContext& ctx);
Real riemann_siegel_theta(double t, const PrecisionContext& ctx);

// Principal branch W0 of the Lambert function: W e^W = x, W >= -1,
// defined for x >= -1/e.
Real lambert_w0(const Real& x, const PrecisionContext& ctx);
double lambert_w0(double x);

// Exponential integral Ei(z) = -PV int_{-z}^inf e^{-t}/t dt, principal
// branch off the negative real axis; for real arguments the standard
// principal-value convention (real-valued result).
Complex exp_integral_ei(const Complex& z, const PrecisionContext& ctx);
Real exp_integral_ei(const Real& x, const PrecisionContext& ctx);

// Logarithmic integral Li(x) = Ei(log x) for x > 1.
Real log_integral(const Real& x, const PrecisionContext& ctx);

// Sieve tables of the Moebius and von Mangoldt functions up to `limit`,
// plus prime counts. Immutable after construction.
class ArithmeticFunctionTable {
  public:
    explicit ArithmeticFunctionTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    // mu(n) in {-1, 0, +1}.
    int mobius(std::uint64_t n) const;
    // Lambda(n) = log p when n = p^m, else 0.
    double von_mangoldt(std::uint64_t n) const;
    // Number of primes <= x.
    std::uint64_t prime_count(double x) const;
    bool is_prime(std::uint64_t n) const;
    // Smallest prime factor (0 for n < 2).
    std::uint32_t smallest_prime_factor(std::uint64_t n) const;

    // Maximum table size accepted by build_arithmetic_tables.
    static constexpr std::uint64_t kDefaultLimitCap = 10'000'000;

  private:
    std::uint64_t limit_;
    std::vector<std::int8_t> mobius_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> prime_count_;
};

// Builds the table, enforcing the memory cap.
ArithmeticFunctionTable build_arithmetic_tables(
    std::uint64_t limit, std::uint64_t cap = ArithmeticFunctionTable::kDefaultLimitCap);

}  // namespace zetazero
