#pragma once

#include <cmath>
#include <functional>

namespace zetazero {

// Adaptive Simpson integration in double precision.
namespace detail {

template <typename F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(F f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    double fa = f(a), fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace zetazero
