#pragma once

#include <vector>

namespace zetazero {

// Double-precision Euler-Maclaurin evaluator for zeta(1/2 + delta + i y),
// specialised for the batch solver: fixed delta, y below a construction-time
// ceiling. Oscillatory phases are carried in double-double so the absolute
// error stays near 1e-14 up to y ~ 1e6, which is what locating a zero to
// 9-10 decimals requires. For anything beyond that precision the MPFR path
// in zeta.hpp is the reference.
//
// Immutable after construction; eval() is safe to call concurrently.
class FastLineEvaluator {
  public:
    FastLineEvaluator(double delta, double y_max);

    struct Value {
        double arg_pv;    // principal arg zeta
        double abs_zeta;  // |zeta|
    };
    Value eval(double y) const;

    double delta() const { return delta_; }
    double y_max() const { return y_max_; }

  private:
    struct dd {
        double hi;
        double lo;
    };

    double delta_;
    double y_max_;
    long n_max_;
    std::vector<dd> lnk_;       // ln k, double-double
    std::vector<double> amp_;   // k^(-1/2-delta)
};

}  // namespace zetazero
