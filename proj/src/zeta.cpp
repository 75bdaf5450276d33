#include "zetazero/zeta.hpp"

#include <cmath>
#include <cstddef>

#include "zetazero/bernoulli.hpp"
#include "zetazero/special_functions.hpp"

namespace zetazero {

namespace {

constexpr long kZetaTermCap = 16'000'000;

// Shared log table for the main Euler-Maclaurin sum. Rebuilt when a call
// needs more precision; extended on demand. Thread-local, so no locking.
struct LogTable {
    mpfr_prec_t prec = 0;
    std::vector<Real> lnk;

    void ensure(long n, mpfr_prec_t p) {
        if (p > prec) {
            prec = p;
            lnk.clear();
        }
        if (static_cast<long>(lnk.size()) >= n + 1) return;
        std::size_t old = lnk.size();
        lnk.resize(static_cast<std::size_t>(n) + 1, Real(prec));
        if (old < 2) old = 2;
        for (std::size_t k = old; k < lnk.size(); ++k) {
            mpfr_set_ui(lnk[k].raw(), static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_log(lnk[k].raw(), lnk[k].raw(), MPFR_RNDN);
        }
    }
};

LogTable& log_table() {
    thread_local LogTable t;
    return t;
}

// One Euler-Maclaurin pass at fixed N. Returns false if the Bernoulli tail
// failed to reach eps within j_max terms (caller then raises N).
bool euler_maclaurin(const Complex& z, long n_terms, mpfr_prec_t wp, Complex& out) {
    const Real& x = z.re;
    const Real& y = z.im;

    LogTable& tab = log_table();
    tab.ensure(n_terms, wp);

    Real sum_re(0.0, wp), sum_im(0.0, wp);
    mpfr_set_ui(sum_re.raw(), 1, MPFR_RNDN);  // k = 1 term

    // scratch registers reused across the loop
    Real e1(wp), phi(wp), s(wp), c(wp), tmp(wp);
    for (long k = 2; k < n_terms; ++k) {
        const Real& lk = tab.lnk[static_cast<std::size_t>(k)];
        mpfr_mul(e1.raw(), x.raw(), lk.raw(), MPFR_RNDN);
        mpfr_neg(e1.raw(), e1.raw(), MPFR_RNDN);
        mpfr_exp(e1.raw(), e1.raw(), MPFR_RNDN);  // k^{-x}
        mpfr_mul(phi.raw(), y.raw(), lk.raw(), MPFR_RNDN);
        mpfr_sin_cos(s.raw(), c.raw(), phi.raw(), MPFR_RNDN);
        mpfr_mul(tmp.raw(), e1.raw(), c.raw(), MPFR_RNDN);
        mpfr_add(sum_re.raw(), sum_re.raw(), tmp.raw(), MPFR_RNDN);
        mpfr_mul(tmp.raw(), e1.raw(), s.raw(), MPFR_RNDN);
        mpfr_sub(sum_im.raw(), sum_im.raw(), tmp.raw(), MPFR_RNDN);
    }
    Complex acc{sum_re, sum_im};

    Real n_real(static_cast<long>(n_terms), wp);
    Real ln_n = log(n_real);
    // N^{-z}
    Complex n_pow_mz = exp(Complex{-(x * ln_n), -(y * ln_n)});
    // N^{1-z} / (z - 1)
    Complex zm1{x - 1.0, y};
    acc += (n_pow_mz * n_real) / zm1;
    // N^{-z} / 2
    acc += n_pow_mz * Real(0.5, wp);

    // Bernoulli tail: terms c_j * u_j with u_1 = z N^{-z-1} and
    // u_{j+1} = u_j (z+2j-1)(z+2j) / N^2.
    Complex u = z * (n_pow_mz / n_real);
    Real inv_n2 = Real(1.0, wp) / (n_real * n_real);
    Real eps(1.0, wp);
    mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(wp) + 6, MPFR_RNDN);
    Real scale = abs(acc) + 1.0;
    const int j_max = static_cast<int>(wp / 2) + 8;
    bool converged = false;
    for (int j = 1; j <= j_max; ++j) {
        Complex term = u * bernoulli_over_factorial(j, wp);
        acc += term;
        if (abs(term) < eps * scale) {
            converged = true;
            break;
        }
        double twoj = 2.0 * j;
        u = u * Complex{x + (twoj - 1.0), y} * Complex{x + twoj, y} * inv_n2;
    }
    out = acc;
    return converged;
}

}  // namespace

Complex zeta(const Complex& z, const PrecisionContext& ctx) {
    if (z.im.is_zero() && z.re == Real(1.0, z.re.prec())) throw PoleError("zeta: pole at z = 1");
    if (z.re < -1.0) throw DomainError("zeta: supported region is Re z > -1");

    const mpfr_prec_t base = ctx.prec_bits() + 16;
    const double t = std::abs(z.im.to_double());

    bool conjugate = z.im.sign() < 0;
    Complex zz{z.re, conjugate ? -z.im : z.im};

    long j_terms = static_cast<long>(base) / 2 + 4;
    long n_terms = static_cast<long>((t + 2.0 * static_cast<double>(j_terms)) / 3.14159265 * 1.05) + 16;
    for (int attempt = 0;; ++attempt) {
        if (n_terms > kZetaTermCap)
            throw ResourceError("zeta: Euler-Maclaurin truncation exceeds term cap");
        mpfr_prec_t wp = base + static_cast<mpfr_prec_t>(std::log2(static_cast<double>(n_terms))) + 8;
        Complex out(wp);
        if (euler_maclaurin(zz, n_terms, wp, out)) {
            if (conjugate) out.im = -out.im;
            return out;
        }
        if (attempt >= 4) throw ConvergenceError("zeta: Euler-Maclaurin tail did not converge");
        n_terms = n_terms * 8 / 5 + 16;
    }
}

namespace {

// zeta with enough working precision that the *absolute* error is below
// |zeta| * 10^-digits even under heavy cancellation (e.g. near a zero).
Complex zeta_cancellation_guarded(const Complex& z, const PrecisionContext& ctx) {
    PrecisionContext c = ctx;
    for (int pass = 0; pass < 4; ++pass) {
        Complex v = zeta(z, c);
        double mag = abs(v).to_double();
        if (mag == 0.0) return v;
        int lost = mag < 1.0 ? static_cast<int>(-std::log10(mag)) + 1 : 0;
        if (c.digits >= ctx.digits + lost + 5) return v;
        c = ctx.widened(lost + 10);
    }
    return zeta(z, c);
}

}  // namespace

Complex chi(const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    if (z.im.is_zero() && (z.re.is_zero() || z.re == Real(1.0, prec)))
        throw PoleError("chi: pole at z = 0 and z = 1");
    if (z.re.sign() <= 0) throw DomainError("chi: requires Re z > 0");
    Complex half_z{z.re * 0.5, z.im * 0.5};
    Complex lg = log_gamma(half_z, ctx);
    Real log_pi = log(Real::pi(prec));
    // pi^{-z/2} * Gamma(z/2) = exp(log Gamma(z/2) - (z/2) log pi)
    Complex factor = exp(lg - half_z * log_pi);
    return factor * zeta(z, ctx);
}

LineValue arg_zeta_shifted_with_modulus(const Real& y, const Real& delta,
                                        const PrecisionContext& ctx) {
    if (y.sign() <= 0) throw DomainError("arg_zeta_shifted: y must be positive");
    if (delta.sign() <= 0 || delta >= 1e-2)
        throw DomainError("arg_zeta_shifted: delta must be in (0, 1e-2)");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    // Within delta of the critical line |zeta| can be as small as ~delta,
    // so budget those digits up front. delta may be far below the double
    // underflow threshold; read its magnitude from the exponent.
    long e2 = mpfr_get_exp(delta.raw());
    int shift_digits = static_cast<int>(-static_cast<double>(e2) * 0.30103) + 2;
    if (shift_digits < 2) shift_digits = 2;
    PrecisionContext wide = ctx.widened(shift_digits);
    Complex v = zeta_cancellation_guarded(Complex{Real(0.5, prec) + delta, y}, wide);
    if (v.re.is_zero() && v.im.is_zero())
        throw Error("arg_zeta_shifted: zeta evaluated to exact zero off the line");
    return LineValue{arg(v), abs(v)};
}

Real arg_zeta_shifted(const Real& y, const Real& delta, const PrecisionContext& ctx) {
    return arg_zeta_shifted_with_modulus(y, delta, ctx).arg;
}

Real theta_exact(const Real& x, const Real& y, const PrecisionContext& ctx) {
    if (x.sign() <= 0 || x >= Real(1.0, x.prec()) + 1e-2)
        throw DomainError("theta_exact: x must lie in the strip");
    if (y.sign() <= 0) throw DomainError("theta_exact: y must be positive");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Complex half{x * 0.5, y * 0.5};
    Complex lg = log_gamma(half, ctx);
    Complex zv = zeta_cancellation_guarded(Complex{x, y}, ctx);
    return lg.im - (y * 0.5) * log(Real::pi(prec)) + arg(zv);
}

Real theta_exact(double x, double y, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    return theta_exact(Real(x, prec), Real(y, prec), ctx);
}

PolarChi polar_chi_exact(const Real& x, const Real& y, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Complex half{x * 0.5, y * 0.5};
    Complex lg = log_gamma(half, ctx);
    Complex zv = zeta_cancellation_guarded(Complex{x, y}, ctx);
    Real log_pi = log(Real::pi(prec));
    // A = pi^{-x/2} |Gamma(z/2)| |zeta|
    Real modulus = exp(lg.re - x * 0.5 * log_pi) * abs(zv);
    Real phase = lg.im - (y * 0.5) * log_pi + arg(zv);
    return PolarChi{modulus, phase, false};
}

PolarChi polar_chi_asymptotic(const Real& x, const Real& y, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real pi = Real::pi(prec);
    Complex zv = zeta_cancellation_guarded(Complex{x, y}, ctx);
    Real two_pi_e = 2.0 * pi * exp(Real(1.0, prec));
    // A = sqrt(2 pi) pi^{-x/2} (y/2)^{(x-1)/2} e^{-pi y/4} |zeta|
    Real log_a = Real(0.5, prec) * log(2.0 * pi) - x * 0.5 * log(pi) +
                 (x - 1.0) * 0.5 * log(y * 0.5) - pi * y * 0.25;
    Real modulus = exp(log_a) * abs(zv);
    Real phase = y * 0.5 * log(y / two_pi_e) + (x - 1.0) * (pi * 0.25) + arg(zv);
    return PolarChi{modulus, phase, true};
}

std::vector<DiagnosticSample> cos_sin_diagnostic(double y_lo, double y_hi, double delta,
                                                 int samples, const PrecisionContext& ctx) {
    if (!(0.0 < y_lo && y_lo < y_hi)) throw UsageError("cos_sin_diagnostic: need 0 < y_lo < y_hi");
    if (samples < 2) throw UsageError("cos_sin_diagnostic: need at least 2 samples");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    std::vector<DiagnosticSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double y = y_lo + (y_hi - y_lo) * i / (samples - 1);
        Real theta = theta_exact(Real(0.5 + delta, prec), Real(y, prec), ctx);
        Real s(prec), c(prec);
        sin_cos(s, c, theta);
        out.push_back({y, c.to_double(), s.to_double()});
    }
    return out;
}

}  // namespace zetazero
