#pragma once

#include "zetazero/real.hpp"

namespace zetazero {

// Complex number over Real. Plain rectangular form; precision follows the
// component Reals.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return max_prec(re, im); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator*(const Real& s, const Complex& a) { return a * s; }
inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex& operator+=(Complex& a, const Complex& b) {
    a.re += b.re;
    a.im += b.im;
    return a;
}
inline Complex& operator-=(Complex& a, const Complex& b) {
    a.re -= b.re;
    a.im -= b.im;
    return a;
}

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

// Principal-branch complex logarithm.
inline Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

inline Complex exp(const Complex& a) {
    Real s(a.prec()), c(a.prec());
    sin_cos(s, c, a.im);
    Real m = exp(a.re);
    return {m * c, m * s};
}

// exp(i*t) for real t.
inline Complex cis(const Real& t) {
    Real s(t.prec()), c(t.prec());
    sin_cos(s, c, t);
    return {c, s};
}

// Principal power a^b = exp(b log a).
inline Complex pow(const Complex& a, const Complex& b) { return exp(b * log(a)); }
inline Complex pow_real_base(const Real& x, const Complex& b) {
    // x > 0 real: x^b = exp(b log x)
    Real lx = log(x);
    return exp(Complex{b.re * lx, b.im * lx});
}

}  // namespace zetazero
