#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "zetazero/errors.hpp"

namespace zetazero {

// Decimal digits -> binary precision with a few spare bits.
inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 8.0);
}

// Arbitrary-precision real number. Thin RAII wrapper around mpfr_t with
// value semantics. Every value carries its own precision; binary operations
// produce results at the larger precision of the two operands, so a chain
// of operations keeps the working precision of its inputs. All rounding is
// to nearest.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(unsigned long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_ui(v_, x, MPFR_RNDN); }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw UsageError("not a valid decimal number: '" + s + "'");
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Scientific-notation string with the given number of significant digits.
    std::string to_sci_string(int sig_digits) const;
    // Plain decimal string (no exponent) with the given significant digits,
    // rounded to nearest.
    std::string to_decimal_string(int sig_digits) const;
    // Plain decimal string truncated (not rounded) after sig_digits digits.
    std::string to_decimal_string_truncated(int sig_digits) const;

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real euler_gamma(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    // 10^e at the given precision.
    static Real pow10(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
        if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

inline mpfr_prec_t max_prec(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}

#define ZETAZERO_REAL_BINOP(op, fn)                                  \
    inline Real operator op(const Real& a, const Real& b) {          \
        Real r(max_prec(a, b));                                      \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                    \
        return r;                                                    \
    }                                                                \
    inline Real operator op(const Real& a, double b) {               \
        Real r(a.prec());                                            \
        fn##_d(r.raw(), a.raw(), b, MPFR_RNDN);                      \
        return r;                                                    \
    }

ZETAZERO_REAL_BINOP(+, mpfr_add)
ZETAZERO_REAL_BINOP(-, mpfr_sub)
ZETAZERO_REAL_BINOP(*, mpfr_mul)
ZETAZERO_REAL_BINOP(/, mpfr_div)
#undef ZETAZERO_REAL_BINOP

inline Real operator+(double a, const Real& b) { return b + a; }
inline Real operator*(double a, const Real& b) { return b * a; }
inline Real operator-(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator/(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real& operator+=(Real& a, const Real& b) { mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }
inline Real& operator-=(Real& a, const Real& b) { mpfr_sub(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }
inline Real& operator*=(Real& a, const Real& b) { mpfr_mul(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }
inline Real& operator/=(Real& a, const Real& b) { mpfr_div(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

#define ZETAZERO_REAL_FN1(name, fn)            \
    inline Real name(const Real& a) {          \
        Real r(a.prec());                      \
        fn(r.raw(), a.raw(), MPFR_RNDN);       \
        return r;                              \
    }

ZETAZERO_REAL_FN1(sqrt, mpfr_sqrt)
ZETAZERO_REAL_FN1(log, mpfr_log)
ZETAZERO_REAL_FN1(exp, mpfr_exp)
ZETAZERO_REAL_FN1(sin, mpfr_sin)
ZETAZERO_REAL_FN1(cos, mpfr_cos)
ZETAZERO_REAL_FN1(atan, mpfr_atan)
ZETAZERO_REAL_FN1(abs, mpfr_abs)
#undef ZETAZERO_REAL_FN1

// rounding to integers takes no rounding mode
#define ZETAZERO_REAL_INTFN(name, fn)          \
    inline Real name(const Real& a) {          \
        Real r(a.prec());                      \
        fn(r.raw(), a.raw());                  \
        return r;                              \
    }
ZETAZERO_REAL_INTFN(floor, mpfr_floor)
ZETAZERO_REAL_INTFN(ceil, mpfr_ceil)
ZETAZERO_REAL_INTFN(round, mpfr_round)
#undef ZETAZERO_REAL_INTFN

inline Real atan2(const Real& y, const Real& x) {
    Real r(max_prec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(max_prec(y, x));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(max_prec(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}

}  // namespace zetazero
