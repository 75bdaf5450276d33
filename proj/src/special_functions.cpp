#include "zetazero/special_functions.hpp"

#include <cmath>
#include <limits>

#include "zetazero/bernoulli.hpp"

namespace zetazero {

namespace {

// Smallest |z| at which the Stirling series reaches `prec` bits. The
// optimally truncated series has error ~ exp(-2*pi*|z|).
double stirling_radius(mpfr_prec_t prec) {
    double r = static_cast<double>(prec) * 0.11032 + 4.0;  // log(2)/(2 pi) per bit
    return r < 12.0 ? 12.0 : r;
}

// Stirling series for the analytic log Gamma, valid once |z| is above
// stirling_radius: (z - 1/2) log z - z + log(2 pi)/2 + sum c_j z^(1-2j).
Complex log_gamma_stirling(const Complex& z, mpfr_prec_t prec) {
    Complex lz = log(z);
    Complex main = (z - Complex(0.5, 0.0, prec)) * lz - z;
    Real half_log_2pi = Real(0.5, prec) * log(Real(2.0, prec) * Real::pi(prec));
    main.re += half_log_2pi;

    Complex inv = Complex(1.0, 0.0, prec) / z;
    Complex inv2 = inv * inv;
    Complex t = inv;
    Complex acc(prec);
    Real scale = abs(main) + 1.0;
    Real eps = scale;
    mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(prec) - 2, MPFR_RNDN);
    Real prev_mag(0.0, prec);
    const int j_max = static_cast<int>(3.2 * abs(z).to_double()) + 8;
    for (int j = 1; j <= j_max; ++j) {
        Complex term = t * bernoulli_stirling_coeff(j, prec);
        Real mag = abs(term);
        if (j > 2 && mag > prev_mag) break;  // asymptotic tail starts to grow
        acc += term;
        if (mag < eps) break;
        prev_mag = mag;
        t = t * inv2;
    }
    return main + acc;
}

bool is_nonpositive_integer(const Complex& z) {
    if (!z.im.is_zero()) return false;
    if (z.re > 0.0) return false;
    Real r = round(z.re);
    return r == z.re;
}

}  // namespace

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");

    if (z.re.sign() <= 0) {
        // Reflection into the right half-plane. Branch offsets of 2 pi i are
        // possible here; the continuity contract covers Re z > 0 only.
        Complex one_minus(Real(1.0, prec) - z.re, -z.im);
        Complex pi_z = z * Real::pi(prec);
        Real s(prec), c(prec);
        // sin(pi z) via sin(a)cosh(b) + i cos(a)sinh(b)
        sin_cos(s, c, pi_z.re);
        Real ch(prec), sh(prec);
        mpfr_cosh(ch.raw(), pi_z.im.raw(), MPFR_RNDN);
        mpfr_sinh(sh.raw(), pi_z.im.raw(), MPFR_RNDN);
        Complex sin_piz{s * ch, c * sh};
        Complex log_pi{log(Real::pi(prec)), Real(0.0, prec)};
        return log_pi - log(sin_piz) - log_gamma(one_minus, ctx);
    }

    const double radius = stirling_radius(prec);
    double zr = z.re.to_double();
    double zi = z.im.to_double();
    double mod = std::hypot(zr, zi);
    long shift = 0;
    if (mod < radius) shift = static_cast<long>(std::ceil(radius - zr)) + 1;

    Complex shifted{z.re + Real(static_cast<double>(shift), prec), z.im};
    Complex result = log_gamma_stirling(shifted, prec);
    // log Gamma(z) = log Gamma(z + m) - sum_{k=0}^{m-1} log(z + k); the
    // principal logs are exact here because Re(z + k) > 0.
    for (long k = 0; k < shift; ++k) {
        result -= log(Complex{z.re + Real(static_cast<double>(k), prec), z.im});
    }
    return result;
}

Real riemann_siegel_theta(const Real& t, const PrecisionContext& ctx) {
    if (t.sign() < 0) throw DomainError("riemann_siegel_theta: t must be >= 0");
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    if (t.is_zero()) return Real(0.0, prec);
    Real half_t = t * 0.5;
    Complex lg = log_gamma(Complex{Real(0.25, prec), half_t}, ctx);
    return lg.im - half_t * log(Real::pi(prec));
}

Real riemann_siegel_theta(double t, const PrecisionContext& ctx) {
    return riemann_siegel_theta(Real(t, ctx.prec_bits()), ctx);
}

double lambert_w0(double x) {
    constexpr double inv_e = 0.36787944117144233;
    if (x < -inv_e) return std::numeric_limits<double>::quiet_NaN();
    double w;
    if (x < -0.32) {
        double s = std::sqrt(2.0 * (1.0 + 2.718281828459045 * x));
        w = -1.0 + s - s * s / 3.0 + 11.0 / 72.0 * s * s * s;
    } else if (x < 1.0) {
        // series seed around 0
        w = x * (1.0 - x + 1.5 * x * x);
    } else {
        double l1 = std::log(x);
        double l2 = std::log(l1 > 1.0 ? l1 : 1.0 + l1);
        w = l1 - l2 + (l1 > 1.0 ? l2 / l1 : 0.0);
    }
    for (int i = 0; i < 32; ++i) {
        double ew = std::exp(w);
        double f = w * ew - x;
        double wp1 = w + 1.0;
        double d = ew * wp1 - f * (w + 2.0) / (2.0 * wp1);
        double step = f / d;
        w -= step;
        if (std::abs(step) <= 1e-16 * (std::abs(w) + 1e-300)) break;
    }
    return w;
}

Real lambert_w0(const Real& x, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    Real inv_e = exp(Real(-1.0, prec));
    Real branch_gap = x + inv_e;  // >= 0 on the domain
    if (branch_gap.sign() < 0) {
        // allow roundoff-level undershoot of the branch point
        Real slack = inv_e;
        mpfr_mul_2si(slack.raw(), slack.raw(), -static_cast<long>(prec) / 2, MPFR_RNDN);
        if (branch_gap < -slack) throw DomainError("lambert_w0: x < -1/e");
        return Real(-1.0, prec);
    }

    // seed
    Real w(prec);
    Real s2 = branch_gap * (2.0 * 2.718281828459045235360287);
    if (s2 < 1e-12) {
        Real s = sqrt(s2);
        w = Real(-1.0, prec) + s - s2 / 3.0;  // + O(s^3), polished below
    } else {
        double xd = x.to_double();
        if (std::isinf(xd)) {
            // very large x: w ~ log x - log log x
            Real lx = log(x);
            w = lx - log(lx);
        } else {
            w = Real(lambert_w0(xd), prec);
        }
    }

    // Stop on the backward error |w e^w - x|. Its floor comes from the
    // quantization of w: one ulp of w moves w e^w by about (1+w) x ulp, so
    // the tolerance carries the (2 + |w|) factor.
    Real ftol = abs(x) * (abs(w) + 2.0);
    mpfr_mul_2si(ftol.raw(), ftol.raw(), -static_cast<long>(prec) + 4, MPFR_RNDN);
    Real floor_term(1.0, prec);
    mpfr_mul_2si(floor_term.raw(), floor_term.raw(), -2 * static_cast<long>(prec), MPFR_RNDN);
    ftol += floor_term;
    for (int i = 0; i < 64; ++i) {
        Real ew = exp(w);
        Real f = w * ew - x;
        if (abs(f) <= ftol) return w;
        Real wp1 = w + 1.0;
        Real denom = ew * wp1 - f * (w + 2.0) / (2.0 * wp1);
        Real step = f / denom;
        w -= step;
    }
    throw ConvergenceError("lambert_w0: Halley iteration did not converge");
}

namespace {

// Power-series zone: Ei(z) = gamma + log z + sum_k z^k / (k k!).
Complex ei_series(const Complex& z, mpfr_prec_t prec, bool real_principal_value) {
    double zr = z.re.to_double();
    double mod = std::hypot(zr, z.im.to_double());
    // Terms peak near e^|z|; budget the cancellation against the result size.
    long boost = static_cast<long>((mod - (zr < 0.0 ? zr : 0.0)) * 1.4427) + 16;
    const mpfr_prec_t wp = prec + boost;

    Complex u(wp);
    u.re = Real(1.0, wp);
    Complex acc(wp);
    Real eps(1.0, wp);
    mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(prec) - 8, MPFR_RNDN);
    for (int k = 1; k < 100000; ++k) {
        u = u * z;
        u = u / Real(static_cast<long>(k), wp);
        Complex term = u / Real(static_cast<long>(k), wp);
        acc += term;
        if (k > mod && abs(term) < eps * (abs(acc) + 1.0)) break;
    }
    Complex logz = real_principal_value
                       ? Complex{log(abs(z)), Real(0.0, wp)}  // PV on the real line
                       : log(z);
    Complex r = acc + logz;
    r.re += Real::euler_gamma(wp);
    Real re_out(prec), im_out(prec);
    mpfr_set(re_out.raw(), r.re.raw(), MPFR_RNDN);
    mpfr_set(im_out.raw(), r.im.raw(), MPFR_RNDN);
    return {re_out, im_out};
}

// Asymptotic zone: Ei(z) ~ e^z/z sum_k k!/z^k, truncated before the
// smallest term.
Complex ei_asymptotic(const Complex& z, mpfr_prec_t prec) {
    Complex inv = Complex(1.0, 0.0, prec) / z;
    Complex term(prec);
    term.re = Real(1.0, prec);
    Complex acc = term;
    Real eps(1.0, prec);
    mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(prec) - 4, MPFR_RNDN);
    Real prev_mag = abs(term);
    for (int k = 1; k < 100000; ++k) {
        term = term * inv * Real(static_cast<long>(k), prec);
        Real mag = abs(term);
        if (mag > prev_mag) break;  // passed the smallest term
        acc += term;
        if (mag < eps) break;
        prev_mag = mag;
    }
    return exp(z) * inv * acc;
}

}  // namespace

Complex exp_integral_ei(const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    if (z.re.is_zero() && z.im.is_zero()) throw PoleError("exp_integral_ei: singular at z = 0");
    double mod = std::hypot(z.re.to_double(), z.im.to_double());
    double radius = std::max(40.0, 2.65 * (ctx.digits + ctx.guard));
    if (mod <= radius) return ei_series(z, prec, /*real_principal_value=*/false);
    return ei_asymptotic(z, prec);
}

Real exp_integral_ei(const Real& x, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits() + 16;
    if (x.is_zero()) throw PoleError("exp_integral_ei: singular at x = 0");
    double mod = std::abs(x.to_double());
    double radius = std::max(40.0, 2.65 * (ctx.digits + ctx.guard));
    Complex zx{x, Real(0.0, prec)};
    Complex r = (mod <= radius) ? ei_series(zx, prec, /*real_principal_value=*/true)
                                : ei_asymptotic(zx, prec);
    return r.re;
}

Real log_integral(const Real& x, const PrecisionContext& ctx) {
    if (x <= 1.0) throw DomainError("log_integral: requires x > 1");
    return exp_integral_ei(log(x), ctx);
}

ArithmeticFunctionTable::ArithmeticFunctionTable(std::uint64_t limit) : limit_(limit) {
    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    mobius_.assign(n, 0);
    spf_.assign(n, 0);
    prime_count_.assign(n, 0);
    std::vector<std::uint32_t> primes;
    mobius_[1] = 1;
    for (std::size_t i = 2; i < n; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            mobius_[i] = -1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf_[i] || i * p >= n) break;
            spf_[i * p] = p;
            mobius_[i * p] = (p == spf_[i]) ? 0 : static_cast<std::int8_t>(-mobius_[i]);
        }
        prime_count_[i] = prime_count_[i - 1] + (spf_[i] == i ? 1 : 0);
    }
}

int ArithmeticFunctionTable::mobius(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw ResourceError("arithmetic table too small for mu(n)");
    return mobius_[static_cast<std::size_t>(n)];
}

double ArithmeticFunctionTable::von_mangoldt(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw ResourceError("arithmetic table too small for Lambda(n)");
    if (n == 1) return 0.0;
    std::uint64_t p = spf_[static_cast<std::size_t>(n)];
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::uint64_t ArithmeticFunctionTable::prime_count(double x) const {
    if (x < 2.0) return 0;
    if (x > static_cast<double>(limit_)) throw ResourceError("arithmetic table too small for pi(x)");
    return prime_count_[static_cast<std::size_t>(x)];
}

bool ArithmeticFunctionTable::is_prime(std::uint64_t n) const {
    if (n < 2 || n > limit_) return false;
    return spf_[static_cast<std::size_t>(n)] == n;
}

std::uint32_t ArithmeticFunctionTable::smallest_prime_factor(std::uint64_t n) const {
    if (n < 2 || n > limit_) return 0;
    return spf_[static_cast<std::size_t>(n)];
}

ArithmeticFunctionTable build_arithmetic_tables(std::uint64_t limit, std::uint64_t cap) {
    if (limit < 2) throw UsageError("build_arithmetic_tables: limit must be >= 2");
    if (limit > cap) throw ResourceError("build_arithmetic_tables: limit exceeds configured cap");
    return ArithmeticFunctionTable(limit);
}

}  // namespace zetazero
