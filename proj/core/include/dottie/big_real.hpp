#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "dottie/precision.hpp"
#include "dottie/rational.hpp"

namespace dottie {

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// binary precision (set at construction); binary operations produce
/// results at the larger operand precision, so precision propagates
/// through expressions without ambient state.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(x_, clamp(bits)); mpfr_set_zero(x_, 1); }
    explicit BigReal(const PrecisionContext& ctx) : BigReal(ctx.working_bits()) {}

    BigReal(const BigReal& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    static BigReal from_long(long v, mpfr_prec_t bits);
    static BigReal from_rational(const Rational& q, mpfr_prec_t bits);
    /// Decimal string, e.g. "0.739085133215".
    static BigReal from_string(const std::string& s, mpfr_prec_t bits);
    static BigReal pi(mpfr_prec_t bits);
    /// 10^e at the given precision.
    static BigReal pow10(long e, mpfr_prec_t bits);

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

    /// Copy rounded to a different precision.
    BigReal rounded_to(mpfr_prec_t bits) const;

    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

    /// Round-to-nearest decimal rendering with the given number of
    /// significant digits; fixed-point for moderate exponents,
    /// scientific otherwise.
    std::string to_string(int significant_digits) const;

    /// Fixed-point rendering with exactly `decimals` digits after the
    /// point, truncated toward zero (no rounding of the last digit).
    std::string to_fixed(int decimals) const;

    BigReal operator-() const;
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator/(long a, const BigReal& b);
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }

    friend BigReal sin(const BigReal& a);
    friend BigReal cos(const BigReal& a);
    friend BigReal tan(const BigReal& a);
    friend BigReal cot(const BigReal& a);
    friend BigReal csc(const BigReal& a);
    friend BigReal asin(const BigReal& a);
    friend BigReal sqrt(const BigReal& a);
    friend BigReal exp(const BigReal& a);
    friend BigReal log(const BigReal& a);
    friend BigReal abs(const BigReal& a);
    friend BigReal floor(const BigReal& a);
    friend BigReal ceil(const BigReal& a);
    friend BigReal gamma_fn(const BigReal& a);
    friend BigReal digamma(const BigReal& a);
    /// a^e for integer e.
    friend BigReal pow_si(const BigReal& a, long e);
    /// e-th root, e >= 1.
    friend BigReal rootn(const BigReal& a, unsigned long e);

private:
    static mpfr_prec_t clamp(mpfr_prec_t bits) { return bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }
    static mpfr_prec_t joint(const BigReal& a, const BigReal& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

    mpfr_t x_;
};

}  // namespace dottie
