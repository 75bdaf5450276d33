#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetazero/fast_line.hpp"
#include "zetazero/precision.hpp"

namespace zetazero {

enum class SolveMethod { lambert_seed, asymptotic_eq, exact_eq };

std::string to_string(SolveMethod m);
SolveMethod solve_method_from_string(const std::string& s);

// One solved zero rho_n = 1/2 + i y_n.
struct ZeroRecord {
    long n = 0;
    Real y;
    int digits_certified = 0;
    SolveMethod method = SolveMethod::asymptotic_eq;
    double residual = 0.0;  // |LHS - RHS| of the solved equation at final delta
};

struct SolverConfig {
    // Strictly decreasing shift schedule; extended by a factor of 1e-3 per
    // stage until the target precision is reached. Never reaches zero.
    std::vector<double> delta_schedule{1e-5, 1e-8, 1e-11};
    double bracket_halfwidth_factor = 0.45;  // fraction of the local mean spacing
    double brent_tol = 1e-12;                // x tolerance relative to the ordinate
    int max_bracket_expansions = 20;
    int target_digits = 30;       // significant digits for the exact solver
    double asymptotic_delta = 1e-9;
    long n_cap = 1'000'000;       // largest index solvable with the zeta engine
};

// Closed-form estimate y~_n = 2 pi (n - 11/8) / W(e^-1 (n - 11/8)).
Real lambert_seed(long n, const PrecisionContext& ctx);
// Same for arbitrarily large indices passed as a decimal string.
Real lambert_seed(const std::string& n, const PrecisionContext& ctx);

// (y/2pi) log(y/(2 pi e)) + arg zeta(1/2+delta+iy)/pi - (n - 11/8)
Real asymptotic_lhs(const Real& y, long n, const Real& delta, const PrecisionContext& ctx);
// theta(y) + arg zeta(1/2+delta+iy) - (n - 3/2) pi
Real exact_lhs(const Real& y, long n, const Real& delta, const PrecisionContext& ctx);

ZeroRecord solve_zero_asymptotic(long n, const SolverConfig& cfg, const PrecisionContext& ctx);
ZeroRecord solve_zero_exact(long n, const SolverConfig& cfg, const PrecisionContext& ctx);

// Batch driver: solves [n_lo, n_hi] with the asymptotic equation, splitting
// across `jobs` threads. Already-solved entries passed in `known` are kept.
struct BatchFailure {
    long n;
    std::string message;
};
struct BatchResult {
    std::vector<ZeroRecord> records;  // ascending n, only the newly solved ones
    std::vector<BatchFailure> failures;
    double min_residual = 0.0;
    double max_residual = 0.0;
};
BatchResult solve_zero_batch(long n_lo, long n_hi, const SolverConfig& cfg,
                             const PrecisionContext& ctx, int jobs,
                             const std::vector<long>& skip = {});

// Gram point g_n: theta(g_n) = n pi, n >= 0.
Real gram_point(long n, const PrecisionContext& ctx);

enum class CountVariant {
    riemann_asymptotic,       // (T/2pi) log(T/(2pi e)) + 7/8
    backlund_exact,           // theta(T)/pi + 1 + S(T)
    critical_line_asymptotic, // (T/2pi) log(T/(2pi e)) + 7/8 + S(T)
    critical_line_exact,      // theta(T)/pi + S(T) + 1  (same value as backlund_exact)
};

struct CountResult {
    Real value;
    bool near_zero_warning = false;  // |zeta(1/2+iT)| < 1e-6: T too close to a zero
};
CountResult count_zeros_smooth(const Real& T, CountVariant variant, const PrecisionContext& ctx);

}  // namespace zetazero
