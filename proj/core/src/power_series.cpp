#include "dottie/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dottie {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
}

PowerSeries PowerSeries::identity(int order) {
    if (order < 1) throw std::invalid_argument("PowerSeries: identity needs order >= 1");
    PowerSeries s(order);
    s.set(1, Rational(1));
    return s;
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.set(0, c);
    return s;
}

PowerSeries PowerSeries::truncated(int new_order) const {
    PowerSeries r(new_order);
    const int n = std::min(new_order, order());
    for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return r;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.set(i, a[i] + b[i]);
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.set(i, a[i] - b[i]);
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
        Rational acc(0);
        for (int j = 0; j <= i; ++j) {
            if (a[j].is_zero() || b[i - j].is_zero()) continue;
            acc += a[j] * b[i - j];
        }
        r.set(i, std::move(acc));
    }
    return r;
}

PowerSeries PowerSeries::scaled(const Rational& s) const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

PowerSeries PowerSeries::pow(unsigned e) const {
    PowerSeries acc = constant(Rational(1), order());
    PowerSeries base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (!inner.is_composable())
        throw std::domain_error("PowerSeries: substituted series must have zero constant term");
    const int n = std::min(order(), inner.order());
    // Horner from the top coefficient down.
    PowerSeries r = constant(c_[static_cast<size_t>(order())], n);
    for (int k = order() - 1; k >= 0; --k) {
        r = r * inner.truncated(n);
        r.set(0, r[0] + c_[static_cast<size_t>(k)]);
    }
    return r;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= order(); ++i) {
        if (i > 0) os << ", ";
        os << c_[static_cast<size_t>(i)];
    }
    os << "]";
    return os.str();
}

}  // namespace dottie
