#pragma once

#include <string>
#include <utility>
#include <vector>

#include <qbarnes/bigrat.hpp>

namespace qbarnes {

/**
 * Dense univariate polynomial in q over BigRat, coefficients stored by
 * ascending power. Canonical: the trailing (leading-degree) entry is nonzero;
 * the zero polynomial is the empty sequence.
 */
class Poly {
public:
    Poly() = default;                        // zero polynomial
    Poly(const BigRat& c);                   // NOLINT: constants embed
    Poly(long c) : Poly(BigRat(c)) {}        // NOLINT
    explicit Poly(std::vector<BigRat> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(BigRat(1L)); }
    /// c * q^k, k >= 0.
    static Poly monomial(const BigRat& c, unsigned k);

    /// Degree, -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t term_count() const;

    /// Coefficient of q^k (zero beyond the degree).
    const BigRat& coeff(std::size_t k) const;
    const BigRat& lead() const; // precondition: nonzero

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const BigRat& c) const;
    Poly operator/(const BigRat& c) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    BigRat eval(const BigRat& q0) const;
    /// q -> q^s, s >= 1.
    Poly subst_power(unsigned long s) const;
    /// Multiply by q^k.
    Poly shift(unsigned k) const;

    /// Quotient and remainder over the rationals; o must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    /// Exact division; throws if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    /// Monic gcd over the rationals. Euclidean remainders are reduced to
    /// primitive integer polynomials at each step to keep coefficients small.
    static Poly gcd(const Poly& a, const Poly& b);

    /// content() * primitive_part() == *this; the primitive part has coprime
    /// integer coefficients and positive leading coefficient.
    BigRat content() const; // precondition: nonzero
    Poly primitive_part() const;
    Poly monic() const;     // precondition: nonzero

    /// Canonical rendering: decreasing degree, explicit * and ^,
    /// e.g. "q^3 + 2*q^2 + 2*q + 1", "-2*q - 1", "0".
    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

} // namespace qbarnes
