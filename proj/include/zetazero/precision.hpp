#pragma once

#include "zetazero/errors.hpp"
#include "zetazero/real.hpp"

namespace zetazero {

// Working-precision contract shared by every evaluation. `digits` is the
// number of significant decimal digits results are good for; computations
// internally carry `guard` extra digits.
struct PrecisionContext {
    int digits = 30;
    int guard = 10;

    PrecisionContext() = default;
    explicit PrecisionContext(int digits_, int guard_ = 10) : digits(digits_), guard(guard_) {
        validate();
    }

    void validate() const {
        if (digits < 15) throw UsageError("precision: digits must be >= 15");
        if (guard < 5) throw UsageError("precision: guard must be >= 5");
    }

    // Comparison tolerance 10^(guard - digits).
    Real eps() const { return Real::pow10(guard - digits, prec_bits()); }

    // Binary working precision including guard digits.
    mpfr_prec_t prec_bits() const { return bits_for_digits(digits + guard); }

    // Context with extra decimal digits (used for recompute-and-compare
    // verification and for evaluations near cancellation).
    PrecisionContext widened(int extra) const { return PrecisionContext(digits + extra, guard); }
};

}  // namespace zetazero
