#include "zetazero/real.hpp"

#include <cstdlib>
#include <cstring>

namespace zetazero {

namespace {

// mpfr_get_str yields a digit string d1d2... and a decimal exponent e with
// value = 0.d1d2... * 10^e. Render it in plain positional notation.
std::string assemble_plain(const char* digits, mpfr_exp_t e, bool negative) {
    std::string d(digits);
    std::string out;
    if (negative) out += '-';
    if (d.empty()) return out + "0";
    if (e <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-e), '0');
        out += d;
    } else if (static_cast<size_t>(e) >= d.size()) {
        out += d;
        out.append(static_cast<size_t>(e) - d.size(), '0');
    } else {
        out += d.substr(0, static_cast<size_t>(e));
        out += '.';
        out += d.substr(static_cast<size_t>(e));
    }
    return out;
}

std::string format(mpfr_srcptr v, int sig_digits, mpfr_rnd_t rnd, bool plain) {
    if (sig_digits < 1) sig_digits = 1;
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_inf_p(v)) return mpfr_sgn(v) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v)) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), v, rnd);
    std::string digits(s[0] == '-' ? s + 1 : s);
    bool neg = s[0] == '-';
    mpfr_free_str(s);
    if (plain) return assemble_plain(digits.c_str(), e, neg);
    std::string out;
    if (neg) out += '-';
    out += digits[0];
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += std::to_string(static_cast<long>(e - 1));
    return out;
}

}  // namespace

std::string Real::to_sci_string(int sig_digits) const {
    return format(v_, sig_digits, MPFR_RNDN, false);
}

std::string Real::to_decimal_string(int sig_digits) const {
    return format(v_, sig_digits, MPFR_RNDN, true);
}

std::string Real::to_decimal_string_truncated(int sig_digits) const {
    return format(v_, sig_digits, MPFR_RNDZ, true);
}

}  // namespace zetazero
