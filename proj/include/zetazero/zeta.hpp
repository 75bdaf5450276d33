#pragma once

#include <vector>

#include "zetazero/complexhp.hpp"
#include "zetazero/precision.hpp"

namespace zetazero {

// Point z = x + delta + i y on (or just off) the critical strip.
struct CriticalPoint {
    double x;
    double y;
    double delta;

    CriticalPoint(double x_, double y_, double delta_ = 0.0) : x(x_), y(y_), delta(delta_) {
        if (x < 0.0 || x > 1.0) throw UsageError("CriticalPoint: x must lie in [0, 1]");
        if (y <= 0.0) throw UsageError("CriticalPoint: y must be positive");
        if (delta < 0.0 || delta >= 1e-2) throw UsageError("CriticalPoint: delta must be in [0, 1e-2)");
    }
};

// Polar decomposition chi = modulus * exp(i phase).
struct PolarChi {
    Real modulus;
    Real phase;
    bool asymptotic = false;
};

// Riemann zeta via Euler-Maclaurin summation; truncation chosen from
// |Im z| and the requested precision. Valid for Re z > -1, z != 1.
Complex zeta(const Complex& z, const PrecisionContext& ctx);

// Completed function chi(z) = pi^(-z/2) Gamma(z/2) zeta(z) for Re z > 0,
// z not in {0, 1}.
Complex chi(const Complex& z, const PrecisionContext& ctx);

// Principal value of arg zeta(1/2 + delta + i y), in (-pi, pi].
// Requires y > 0 and 0 < delta < 1e-2.
Real arg_zeta_shifted(const Real& y, const Real& delta, const PrecisionContext& ctx);

// Principal arg zeta together with |zeta| at the same point; the solver
// uses the modulus to tell a genuine zero crossing from an arg branch cut.
struct LineValue {
    Real arg;       // principal value
    Real abs_zeta;  // |zeta| at the shifted point
};
LineValue arg_zeta_shifted_with_modulus(const Real& y, const Real& delta,
                                        const PrecisionContext& ctx);

// Continuous-arg-Gamma phase theta(x, y) = arg Gamma((x+iy)/2)
// - (y/2) log pi + arg zeta(x + i y), with principal-value arg zeta.
Real theta_exact(const Real& x, const Real& y, const PrecisionContext& ctx);
Real theta_exact(double x, double y, const PrecisionContext& ctx);

// Exact polar decomposition of chi at x + i y.
PolarChi polar_chi_exact(const Real& x, const Real& y, const PrecisionContext& ctx);
// Large-y polar decomposition (Stirling form of modulus and phase).
PolarChi polar_chi_asymptotic(const Real& x, const Real& y, const PrecisionContext& ctx);

// Uniform grid of (y, cos theta, sin theta) at x = 1/2 + delta, for the
// zero-crossing diagnostic plots.
struct DiagnosticSample {
    double y;
    double cos_theta;
    double sin_theta;
};
std::vector<DiagnosticSample> cos_sin_diagnostic(double y_lo, double y_hi, double delta,
                                                 int samples, const PrecisionContext& ctx);

}  // namespace zetazero
