#pragma once

#include <string>
#include <vector>

#include "dottie/partitions.hpp"
#include "dottie/power_series.hpp"
#include "dottie/rational.hpp"

namespace dottie {

/// Which derivation produced a coefficient table.
enum class CoefficientRoute { reversion, lagrange };

std::string route_name(CoefficientRoute r);

struct CoefficientEntry {
    int n;       // odd, strictly increasing within a table
    Rational a;  // coefficient of pi^n
};

/// Exact coefficients a_n of the odd-power-of-pi expansion of the
/// Dottie number about pi/2. Indices are odd and strictly increasing;
/// the two routes must agree entry by entry (tested, not assumed).
class CoefficientTable {
public:
    CoefficientTable(CoefficientRoute route, std::vector<CoefficientEntry> entries);

    CoefficientRoute route() const { return route_; }
    const std::vector<CoefficientEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }

    bool has(int n) const;
    const Rational& at(int n) const;  // throws std::out_of_range if missing
    int max_n() const { return entries_.empty() ? 0 : entries_.back().n; }

    /// [{"n": 3, "num": "-1", "den": "768"}, ...] with integers as
    /// decimal strings of unbounded size.
    std::string to_json() const;

    /// Fixed-width text table for docs.
    std::string to_text_table() const;

private:
    CoefficientRoute route_;
    std::vector<CoefficientEntry> entries_;
};

/// Maclaurin series of sin u to the given order (>= 1): coefficient of
/// u^(2m+1) is (-1)^m / (2m+1)!, even coefficients zero.
PowerSeries sine_series(int order);

/// The shifted fixed-point function u + sin u, i.e. x - cos(x) expanded
/// at x = pi/2 + u with the constant pi/2 dropped.
PowerSeries shifted_fixed_point_series(int order);

/// Multiplicative inverse of a series with nonzero constant term,
/// computed term by term as a Faa di Bruno partition sum (not by linear
/// solving), truncated at `order`.
PowerSeries series_reciprocal_fdb(const PowerSeries& s, int order);

/// Compositional inverse: t with s(t(v)) = v + O(v^(order+1)).
/// Requires s[0] == 0 and s[1] != 0.
PowerSeries series_reversion(const PowerSeries& s, int order);

/// Route A: revert u + sin u and rescale, a_n = c_n * (-1/2)^n for odd
/// n <= n_max. Even reversion coefficients vanish by parity (checked).
CoefficientTable kaplan_coefficients_reversion(int n_max);

/// Route B: the Lagrange-inversion limit evaluated exactly by series
/// coefficient extraction. With t = x - pi/2 the bracket becomes
/// -sin(t)/t - 1 (constant term -2); the (n-1)-th derivative limit is
/// (n-1)! times the t^(n-1) coefficient of the bracket to the power -n,
/// and the reciprocal is taken with series_reciprocal_fdb.
/// Even n is zero by parity and returns exact 0.
Rational kaplan_coefficient_lagrange(int n);

/// Route B assembled into a table over odd n <= n_max.
CoefficientTable kaplan_coefficients_lagrange(int n_max);

/// Derivative of x - cos(x) at pi/2: the value is either the symbol
/// pi/2 (n = 0) or a small exact integer from the cosine derivative
/// cycle. Kept tagged so the exact module never touches floats.
struct FixedPointDerivative {
    bool is_half_pi;  // true only for n = 0
    long value;       // valid when !is_half_pi

    bool operator==(const FixedPointDerivative&) const = default;
};

FixedPointDerivative derivative_table_f(int n);

/// g^(n)(pi/2) for n = 1..n_max, where g is the inverse of x - cos(x):
/// g^(n)(pi/2) = n! * c_n with c_n the reversion coefficients of
/// u + sin u. (g^(0)(pi/2) is the symbol pi/2 and is not part of the
/// rational sequence.)
std::vector<Rational> derivative_table_g(int n_max);

/// Coefficient of pi^(2k+1) in the all-odd-powers form of the series:
/// b_0 = 1/2 + a_1 and b_k = a_(2k+1) for k >= 1.
Rational kaplan_b_coefficient(const CoefficientTable& table, int k);

}  // namespace dottie
