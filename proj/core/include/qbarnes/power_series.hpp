#pragma once

#include <vector>

#include <qbarnes/bigrat.hpp>

namespace qbarnes {

/**
 * Truncated formal power series in t over BigRat: exactly `order`
 * coefficients, for t^0 .. t^{order-1}. All arithmetic truncates at the
 * common order; mixing orders is an error.
 */
class PowerSeries {
public:
    /// Zero series of the given truncation order (order >= 1).
    explicit PowerSeries(std::size_t order);
    PowerSeries(std::size_t order, std::vector<BigRat> coeffs);

    static PowerSeries one(std::size_t order);

    std::size_t order() const { return c_.size(); }
    const BigRat& coeff(std::size_t k) const { return c_.at(k); }
    void set_coeff(std::size_t k, const BigRat& v) { c_.at(k) = v; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    /// Cauchy product truncated to the common order.
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries operator*(const BigRat& c) const;
    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

    /// Multiplicative inverse up to the truncation order; the constant term
    /// must be nonzero (NonUnitError otherwise).
    PowerSeries invert() const;

private:
    void require_same_order(const PowerSeries& o) const;
    std::vector<BigRat> c_;
};

} // namespace qbarnes
