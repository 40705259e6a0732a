#pragma once

#include <vector>

#include "dottie/rational.hpp"

namespace dottie {

/// Truncated formal power series with exact rational coefficients,
/// indexed 0..order (inclusive). Arithmetic on two series truncates to
/// the smaller order. A series with zero constant term is "composable":
/// it may be substituted into another series.
class PowerSeries {
public:
    /// Zero series of the given truncation order.
    explicit PowerSeries(int order);

    /// order = coefficients.size() - 1.
    explicit PowerSeries(std::vector<Rational> coefficients);

    /// The series u (coefficient 1 at index 1) at the given order.
    static PowerSeries identity(int order);

    /// A constant series.
    static PowerSeries constant(const Rational& c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    void set(int i, Rational v) { c_[static_cast<size_t>(i)] = std::move(v); }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_composable() const { return c_[0].is_zero(); }

    /// Copy truncated (or zero-extended) to a new order.
    PowerSeries truncated(int new_order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    PowerSeries scaled(const Rational& s) const;

    /// this^e, truncated at this->order(). e >= 0.
    PowerSeries pow(unsigned e) const;

    /// this(inner), truncated at min(order, inner.order). inner must be
    /// composable.
    PowerSeries compose(const PowerSeries& inner) const;

    bool operator==(const PowerSeries&) const = default;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

}  // namespace dottie
