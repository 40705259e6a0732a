#include "dottie/series_kernel.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dottie {

std::string route_name(CoefficientRoute r) {
    return r == CoefficientRoute::reversion ? "reversion" : "lagrange";
}

CoefficientTable::CoefficientTable(CoefficientRoute route, std::vector<CoefficientEntry> entries)
    : route_(route), entries_(std::move(entries)) {
    int prev = 0;
    for (const auto& e : entries_) {
        if (e.n <= 0 || e.n % 2 == 0)
            throw std::invalid_argument("CoefficientTable: indices must be odd and positive");
        if (e.n <= prev)
            throw std::invalid_argument("CoefficientTable: indices must be strictly increasing");
        prev = e.n;
    }
}

bool CoefficientTable::has(int n) const {
    for (const auto& e : entries_)
        if (e.n == n) return true;
    return false;
}

const Rational& CoefficientTable::at(int n) const {
    for (const auto& e : entries_)
        if (e.n == n) return e.a;
    throw std::out_of_range("CoefficientTable: no entry for n=" + std::to_string(n));
}

std::string CoefficientTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries_) {
        arr.push_back({{"n", e.n}, {"num", e.a.num_str()}, {"den", e.a.den_str()}});
    }
    return arr.dump();
}

std::string CoefficientTable::to_text_table() const {
    size_t w = 12;
    for (const auto& e : entries_) w = std::max(w, e.a.str().size());
    std::ostringstream os;
    os << std::left << std::setw(6) << "n" << std::setw(w + 2) << "a_n"
       << "route=" << route_name(route_) << "\n";
    for (const auto& e : entries_)
        os << std::left << std::setw(6) << e.n << std::setw(w + 2) << e.a.str() << "\n";
    return os.str();
}

PowerSeries sine_series(int order) {
    if (order < 1) throw std::invalid_argument("sine_series: order must be >= 1");
    PowerSeries s(order);
    mpz_class fact(1);  // (2m+1)! running value
    for (int m = 0; 2 * m + 1 <= order; ++m) {
        if (m > 0) fact *= mpz_class(2 * m) * mpz_class(2 * m + 1);
        Rational c(mpz_class(m % 2 == 0 ? 1 : -1), fact);
        s.set(2 * m + 1, c);
    }
    return s;
}

PowerSeries shifted_fixed_point_series(int order) {
    PowerSeries s = sine_series(order);
    s.set(1, s[1] + Rational(1));
    return s;
}

PowerSeries series_reciprocal_fdb(const PowerSeries& s, int order) {
    if (s[0].is_zero()) throw std::domain_error("non-invertible series: zero constant term");
    if (order < 0) throw std::invalid_argument("series_reciprocal_fdb: negative order");

    const Rational inv0 = s[0].reciprocal();
    PowerSeries r(order);
    r.set(0, inv0);
    for (int k = 1; k <= order; ++k) {
        // r_k = sum over partitions {m_j} of k of
        //       (-1)^S * S! / s_0^(S+1) * prod_j s_j^(m_j) / m_j!
        Rational acc(0);
        for (const auto& part : enumerate_partitions(static_cast<unsigned>(k))) {
            Rational term(1);
            bool zero = false;
            mpz_class mult_fact(1);
            for (size_t j = 0; j < part.multiplicities.size(); ++j) {
                const unsigned m = part.multiplicities[j];
                if (m == 0) continue;
                const int idx = static_cast<int>(j) + 1;
                if (idx > s.order() || s[idx].is_zero()) {
                    zero = true;
                    break;
                }
                term *= s[idx].pow(static_cast<long>(m));
                mult_fact *= factorial(m);
            }
            if (zero) continue;
            const unsigned parts = part.part_count();
            Rational coeff(factorial(parts), mult_fact);
            if (parts % 2 == 1) coeff = -coeff;
            acc += coeff * term * inv0.pow(static_cast<long>(parts) + 1);
        }
        r.set(k, std::move(acc));
    }
    return r;
}

PowerSeries series_reversion(const PowerSeries& s, int order) {
    if (!s[0].is_zero() || s.order() < 1 || s[1].is_zero())
        throw std::domain_error("non-reversible series: need s[0] = 0 and s[1] != 0");
    if (order < 1) throw std::invalid_argument("series_reversion: order must be >= 1");

    const Rational inv1 = s[1].reciprocal();
    const PowerSeries src = s.truncated(order);
    PowerSeries t(order);
    t.set(1, inv1);
    for (int n = 2; n <= order; ++n) {
        // With t_n still zero, the v^n coefficient of s(t(v)) is the
        // defect; dividing by s_1 gives the correction.
        const PowerSeries composed = src.truncated(n).compose(t.truncated(n));
        t.set(n, -(composed[n] * inv1));
    }
    return t;
}

CoefficientTable kaplan_coefficients_reversion(int n_max) {
    if (n_max < 1 || n_max % 2 == 0)
        throw std::invalid_argument("kaplan_coefficients_reversion: n_max must be odd and >= 1");
    const PowerSeries c = series_reversion(shifted_fixed_point_series(n_max), n_max);
    const Rational minus_half(-1, 2);
    std::vector<CoefficientEntry> entries;
    for (int n = 1; n <= n_max; ++n) {
        if (n % 2 == 0) {
            if (!c[n].is_zero())
                throw std::logic_error("kaplan_coefficients_reversion: parity violation at n=" +
                                       std::to_string(n));
            continue;
        }
        entries.push_back({n, c[n] * minus_half.pow(n)});
    }
    return CoefficientTable(CoefficientRoute::reversion, std::move(entries));
}

Rational kaplan_coefficient_lagrange(int n) {
    if (n < 1) throw std::invalid_argument("kaplan_coefficient_lagrange: n must be >= 1");
    if (n % 2 == 0) return Rational(0);  // zero by parity

    // bracket(t) = cos(pi/2 + t)/t - 1 = -sin(t)/t - 1.
    const int ord = n - 1;
    PowerSeries bracket(std::max(ord, 1));
    bracket.set(0, Rational(-2));
    mpz_class fact(1);  // (2m+1)!
    for (int m = 1; 2 * m <= bracket.order(); ++m) {
        fact *= mpz_class(2 * m) * mpz_class(2 * m + 1);
        bracket.set(2 * m, Rational(mpz_class(m % 2 == 0 ? -1 : 1), fact));
    }

    const PowerSeries inv_n = series_reciprocal_fdb(bracket, ord).pow(static_cast<unsigned>(n));
    // a_n = [t^(n-1)] bracket^(-n) / (n * 2^n).
    return inv_n[ord] / (Rational(n) * Rational(2).pow(n));
}

CoefficientTable kaplan_coefficients_lagrange(int n_max) {
    if (n_max < 1 || n_max % 2 == 0)
        throw std::invalid_argument("kaplan_coefficients_lagrange: n_max must be odd and >= 1");
    std::vector<CoefficientEntry> entries;
    for (int n = 1; n <= n_max; n += 2) entries.push_back({n, kaplan_coefficient_lagrange(n)});
    return CoefficientTable(CoefficientRoute::lagrange, std::move(entries));
}

FixedPointDerivative derivative_table_f(int n) {
    if (n < 0) throw std::invalid_argument("derivative_table_f: n must be >= 0");
    if (n == 0) return {true, 0};
    if (n == 1) return {false, 2};
    // f^(n) = cos^(n-2), and cos^(p)(pi/2) cycles 0, -1, 0, 1.
    switch ((n - 2) % 4) {
        case 0: return {false, 0};
        case 1: return {false, -1};
        case 2: return {false, 0};
        default: return {false, 1};
    }
}

std::vector<Rational> derivative_table_g(int n_max) {
    if (n_max < 1) throw std::invalid_argument("derivative_table_g: n_max must be >= 1");
    const PowerSeries c = series_reversion(shifted_fixed_point_series(n_max), n_max);
    std::vector<Rational> g;
    g.reserve(static_cast<size_t>(n_max));
    mpz_class fact(1);
    for (int n = 1; n <= n_max; ++n) {
        fact *= n;
        g.push_back(Rational(fact) * c[n]);
    }
    return g;
}

Rational kaplan_b_coefficient(const CoefficientTable& table, int k) {
    if (k < 0) throw std::invalid_argument("kaplan_b_coefficient: k must be >= 0");
    if (k == 0) return Rational(1, 2) + table.at(1);
    return table.at(2 * k + 1);
}

}  // namespace dottie
