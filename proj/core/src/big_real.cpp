#include "dottie/big_real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "dottie/precision.hpp"

namespace dottie {

PrecisionContext::PrecisionContext(int p, int guard) : decimal_digits(p), guard_digits(guard) {
    if (p < 10) throw std::invalid_argument("PrecisionContext: decimal_digits must be >= 10");
    if (guard < 5) throw std::invalid_argument("PrecisionContext: guard_digits must be >= 5");
}

mpfr_prec_t PrecisionContext::bits_for_digits(int decimal_digits) {
    // log2(10) = 3.3219...; a few spare bits cover conversion slack.
    return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigReal BigReal::from_long(long v, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_rational(const Rational& q, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_q(r.x_, q.mpq().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t bits) {
    BigReal r(bits);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal: cannot parse '" + s + "'");
    return r;
}

BigReal BigReal::pi(mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow10(long e, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set_si(r.x_, 10, MPFR_RNDN);
    mpfr_pow_si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::rounded_to(mpfr_prec_t bits) const {
    BigReal r(bits);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

#define DOTTIE_BINOP(op, fn)                                   \
    BigReal operator op(const BigReal& a, const BigReal& b) {  \
        BigReal r(BigReal::joint(a, b));                       \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                       \
        return r;                                              \
    }

DOTTIE_BINOP(+, mpfr_add)
DOTTIE_BINOP(-, mpfr_sub)
DOTTIE_BINOP(*, mpfr_mul)
DOTTIE_BINOP(/, mpfr_div)
#undef DOTTIE_BINOP

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.prec());
    mpfr_si_sub(r.x_, a, b.x_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.prec());
    mpfr_si_div(r.x_, a, b.x_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

#define DOTTIE_UNFN(name, fn)              \
    BigReal name(const BigReal& a) {       \
        BigReal r(a.prec());               \
        fn(r.x_, a.x_, MPFR_RNDN);         \
        return r;                          \
    }

DOTTIE_UNFN(sin, mpfr_sin)
DOTTIE_UNFN(cos, mpfr_cos)
DOTTIE_UNFN(tan, mpfr_tan)
DOTTIE_UNFN(cot, mpfr_cot)
DOTTIE_UNFN(csc, mpfr_csc)
DOTTIE_UNFN(asin, mpfr_asin)
DOTTIE_UNFN(sqrt, mpfr_sqrt)
DOTTIE_UNFN(exp, mpfr_exp)
DOTTIE_UNFN(log, mpfr_log)
DOTTIE_UNFN(abs, mpfr_abs)
DOTTIE_UNFN(gamma_fn, mpfr_gamma)
DOTTIE_UNFN(digamma, mpfr_digamma)
#undef DOTTIE_UNFN

BigReal floor(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_floor(r.x_, a.x_);
    return r;
}

BigReal ceil(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_ceil(r.x_, a.x_);
    return r;
}

BigReal pow_si(const BigReal& a, long e) {
    BigReal r(a.prec());
    mpfr_pow_si(r.x_, a.x_, e, MPFR_RNDN);
    return r;
}

BigReal rootn(const BigReal& a, unsigned long e) {
    BigReal r(a.prec());
    mpfr_rootn_ui(r.x_, a.x_, e, MPFR_RNDN);
    return r;
}

namespace {

struct MpfrString {
    char* p;
    explicit MpfrString(char* s) : p(s) {}
    ~MpfrString() { mpfr_free_str(p); }
};

// Digits and decimal exponent: value = +/- 0.DIGITS * 10^exp.
// mpfr_get_str requires n == 0 or n >= 2, so pad the request; callers
// that truncate may cut the extra digit off again.
std::string digits_of(mpfr_srcptr x, size_t n, mpfr_exp_t* exp, mpfr_rnd_t rnd) {
    MpfrString s(mpfr_get_str(nullptr, exp, 10, n < 2 ? 2 : n, x, rnd));
    std::string d(s.p);
    if (!d.empty() && d[0] == '-') d.erase(0, 1);
    return d;
}

}  // namespace

std::string BigReal::to_string(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("BigReal::to_string: need >= 1 digit");
    if (is_nan()) return "nan";
    if (mpfr_inf_p(x_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";

    mpfr_exp_t exp = 0;
    std::string d = digits_of(x_, static_cast<size_t>(significant_digits), &exp, MPFR_RNDN);
    const std::string sgn = sign() < 0 ? "-" : "";

    if (exp > significant_digits + 6 || exp < -5) {
        // Scientific: d.ddd e(exp-1) so the mantissa has one leading digit.
        std::string m = d.substr(0, 1);
        if (d.size() > 1) m += "." + d.substr(1);
        return sgn + m + "e" + std::to_string(exp - 1);
    }
    if (exp <= 0) return sgn + "0." + std::string(static_cast<size_t>(-exp), '0') + d;
    if (static_cast<size_t>(exp) >= d.size()) return sgn + d + std::string(static_cast<size_t>(exp) - d.size(), '0');
    return sgn + d.substr(0, static_cast<size_t>(exp)) + "." + d.substr(static_cast<size_t>(exp));
}

std::string BigReal::to_fixed(int decimals) const {
    if (decimals < 0) throw std::invalid_argument("BigReal::to_fixed: negative digit count");
    if (is_nan() || mpfr_inf_p(x_)) throw std::domain_error("BigReal::to_fixed: non-finite value");
    const std::string sgn = sign() < 0 ? "-" : "";
    if (is_zero()) return "0." + std::string(static_cast<size_t>(decimals), '0');

    mpfr_exp_t exp = 0;
    // Truncation toward zero; request enough digits to cover the
    // integer part plus the asked-for decimals.
    std::string probe = digits_of(x_, 2, &exp, MPFR_RNDZ);
    long want = static_cast<long>(exp) + decimals;
    if (want < 1) {
        // Value smaller than the last rendered place.
        return sgn + "0." + std::string(static_cast<size_t>(decimals), '0');
    }
    std::string d = digits_of(x_, static_cast<size_t>(want), &exp, MPFR_RNDZ);
    // mpfr may return more digits than asked; cut, never round.
    if (d.size() > static_cast<size_t>(want)) d.resize(static_cast<size_t>(want));
    if (d.size() < static_cast<size_t>(want)) d += std::string(static_cast<size_t>(want) - d.size(), '0');

    std::string int_part, frac_part;
    if (exp <= 0) {
        int_part = "0";
        frac_part = std::string(static_cast<size_t>(-exp), '0') + d;
    } else {
        int_part = d.substr(0, static_cast<size_t>(exp));
        frac_part = d.substr(static_cast<size_t>(exp));
    }
    frac_part.resize(static_cast<size_t>(decimals), '0');
    return sgn + int_part + "." + frac_part;
}

}  // namespace dottie
