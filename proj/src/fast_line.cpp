#include "zetazero/fast_line.hpp"

#include <cmath>
#include <complex>

#include "zetazero/bernoulli.hpp"
#include "zetazero/errors.hpp"
#include "zetazero/real.hpp"

namespace zetazero {

namespace {

struct dd2 {
    double hi;
    double lo;
};

inline dd2 two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd2 two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

// a (double) times b (double-double)
inline dd2 mul_d_dd(double a, dd2 b) {
    dd2 p = two_prod(a, b.hi);
    p.lo += a * b.lo;
    dd2 r = two_sum(p.hi, p.lo);
    return r;
}

inline dd2 add_dd_d(dd2 a, double b) {
    dd2 s = two_sum(a.hi, b);
    s.lo += a.lo;
    return two_sum(s.hi, s.lo);
}

constexpr double kTwoPiHi = 6.283185307179586;
constexpr double kTwoPiLo = 2.4492935982947064e-16;
constexpr double kInvTwoPi = 0.15915494309189535;

// phi mod 2pi, phi supplied as double-double
inline double reduce_two_pi(dd2 phi) {
    double q = std::nearbyint(phi.hi * kInvTwoPi);
    dd2 p1 = two_prod(q, kTwoPiHi);
    double r = phi.hi - p1.hi;           // exact (Sterbenz-ish, |r| <= pi + eps)
    r -= p1.lo;
    r += phi.lo;
    r -= q * kTwoPiLo;
    return r;
}

// B_{2j}/(2j)! as doubles, filled once.
const std::vector<double>& bernoulli_coeffs() {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        t.reserve(72);
        for (int j = 1; j <= 72; ++j) t.push_back(bernoulli_over_factorial(j, 64).to_double());
        return t;
    }();
    return table;
}

}  // namespace

FastLineEvaluator::FastLineEvaluator(double delta, double y_max)
    : delta_(delta), y_max_(y_max) {
    if (!(delta > 0.0) || delta >= 1e-2)
        throw UsageError("FastLineEvaluator: delta must be in (0, 1e-2)");
    if (!(y_max > 0.0)) throw UsageError("FastLineEvaluator: y_max must be positive");
    n_max_ = static_cast<long>(1.5 * y_max / 6.283185307179586) + 64;

    const mpfr_prec_t prec = 128;
    lnk_.resize(static_cast<std::size_t>(n_max_) + 1, dd{0.0, 0.0});
    amp_.resize(static_cast<std::size_t>(n_max_) + 1, 0.0);
    Real x(0.5, prec);
    x = x + Real(delta, prec);
    Real lk(prec), a(prec), rest(prec);
    amp_[1] = 1.0;
    for (long k = 2; k <= n_max_; ++k) {
        mpfr_set_ui(lk.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_log(lk.raw(), lk.raw(), MPFR_RNDN);
        double hi = lk.to_double();
        mpfr_sub_d(rest.raw(), lk.raw(), hi, MPFR_RNDN);
        lnk_[static_cast<std::size_t>(k)] = dd{hi, rest.to_double()};
        mpfr_mul(a.raw(), x.raw(), lk.raw(), MPFR_RNDN);
        mpfr_neg(a.raw(), a.raw(), MPFR_RNDN);
        mpfr_exp(a.raw(), a.raw(), MPFR_RNDN);
        amp_[static_cast<std::size_t>(k)] = a.to_double();
    }
}

FastLineEvaluator::Value FastLineEvaluator::eval(double y) const {
    if (!(y > 0.0) || y > y_max_)
        throw DomainError("FastLineEvaluator: y outside the prepared range");
    long n = static_cast<long>(1.5 * y * kInvTwoPi) + 48;
    if (n < 64) n = 64;
    if (n > n_max_) n = n_max_;

    dd2 sum_re{1.0, 0.0};  // k = 1
    dd2 sum_im{0.0, 0.0};
    for (long k = 2; k < n; ++k) {
        const dd& l = lnk_[static_cast<std::size_t>(k)];
        dd2 phi = two_prod(y, l.hi);
        phi.lo = std::fma(y, l.lo, phi.lo);
        double r = reduce_two_pi(phi);
        double a = amp_[static_cast<std::size_t>(k)];
        sum_re = add_dd_d(sum_re, a * std::cos(r));
        sum_im = add_dd_d(sum_im, -a * std::sin(r));
    }

    // correction terms in plain complex<double>; they are O(N^{-1/2})
    const double x = 0.5 + delta_;
    const dd& ln_n = lnk_[static_cast<std::size_t>(n)];
    dd2 phin = two_prod(y, ln_n.hi);
    phin.lo = std::fma(y, ln_n.lo, phin.lo);
    double rn = reduce_two_pi(phin);
    double nx = std::exp(-x * ln_n.hi - x * ln_n.lo);
    std::complex<double> n_pow_mz = nx * std::complex<double>(std::cos(rn), -std::sin(rn));
    std::complex<double> z(x, y);
    std::complex<double> tail = n_pow_mz * static_cast<double>(n) / (z - 1.0) + 0.5 * n_pow_mz;

    const auto& coeff = bernoulli_coeffs();
    std::complex<double> u = z * n_pow_mz / static_cast<double>(n);
    const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    for (std::size_t j = 1; j <= coeff.size(); ++j) {
        std::complex<double> term = coeff[j - 1] * u;
        tail += term;
        if (std::abs(term) < 1e-19) break;
        double twoj = 2.0 * static_cast<double>(j);
        u *= (z + (twoj - 1.0)) * (z + twoj) * inv_n2;
    }

    double re = sum_re.hi + (sum_re.lo + tail.real());
    double im = sum_im.hi + (sum_im.lo + tail.imag());
    return Value{std::atan2(im, re), std::hypot(re, im)};
}

}  // namespace zetazero
