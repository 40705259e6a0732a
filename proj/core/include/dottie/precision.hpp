#pragma once

#include <mpfr.h>

namespace dottie {

/// Requested decimal output precision plus guard digits. All
/// intermediate arithmetic runs at P + guard digits; results are
/// trustworthy to P digits. An immutable value passed explicitly --
/// there is no ambient global precision state.
struct PrecisionContext {
    int decimal_digits;  // P, >= 10
    int guard_digits;    // >= 5

    explicit PrecisionContext(int p, int guard = kDefaultGuardDigits);

    static constexpr int kDefaultGuardDigits = 15;

    int working_digits() const { return decimal_digits + guard_digits; }

    /// Binary precision backing the decimal working precision.
    mpfr_prec_t working_bits() const { return bits_for_digits(working_digits()); }

    /// A context with the guard doubled, for stability retries.
    PrecisionContext with_doubled_guard() const {
        return PrecisionContext(decimal_digits, 2 * guard_digits);
    }

    static mpfr_prec_t bits_for_digits(int decimal_digits);

    bool operator==(const PrecisionContext&) const = default;
};

}  // namespace dottie
