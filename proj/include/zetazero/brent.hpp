#pragma once

#include <cmath>
#include <utility>

#include "zetazero/errors.hpp"
#include "zetazero/real.hpp"

namespace zetazero {

inline int sgn(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }
inline int sgn(const Real& x) { return x.sign(); }

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
// Works for double and Real alike. `tol` is the absolute x tolerance.
template <typename T, typename F>
T brent_root(F&& f, T a, T b, T fa, T fb, const T& tol, int max_iter = 300) {
    using std::abs;
    if (sgn(fa) == 0) return a;
    if (sgn(fb) == 0) return b;
    if (sgn(fa) == sgn(fb)) throw BracketError("brent_root: endpoints do not bracket a sign change");
    T c = a, fc = fa;
    T d = b - a, e = b - a;
    for (int it = 0; it < max_iter; ++it) {
        if (sgn(fb) == sgn(fc)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (abs(fc) < abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        T xm = (c - b) * 0.5;
        if (abs(xm) <= tol || sgn(fb) == 0) return b;
        if (abs(e) >= tol && abs(fa) > abs(fb)) {
            // inverse quadratic interpolation, falling back to secant
            T s = fb / fa;
            T p = s, q = s;
            if (sgn(a - c) == 0) {
                p = xm * s * 2.0;
                q = 1.0 - s;
            } else {
                T qq = fa / fc;
                T r = fb / fc;
                p = s * (xm * qq * (qq - r) * 2.0 - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (sgn(p) > 0) q = -q;
            p = abs(p);
            T min1 = xm * q * 3.0 - abs(q * tol);
            T min2 = abs(e * q);
            if ((p + p) < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (abs(d) > tol) {
            b += d;
        } else {
            b += sgn(xm) >= 0 ? tol : -tol;
        }
        fb = f(b);
    }
    throw ConvergenceError("brent_root: iteration limit reached");
}

}  // namespace zetazero
