#pragma once

#include <string>

#include <qbarnes/poly.hpp>

namespace qbarnes {

/**
 * Canonical rational function in q over BigRat: num/den with
 * gcd(num, den) = 1 and den monic. Structural equality of the (num, den)
 * pair is therefore equality in the field Q(q), which is what every
 * identity check in this library relies on.
 */
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {} // zero: 0/1
    RatFun(const BigRat& c) : num_(Poly(c)), den_(Poly::one()) {} // NOLINT
    RatFun(long c) : RatFun(BigRat(c)) {}                         // NOLINT
    explicit RatFun(const Poly& p) : num_(p), den_(Poly::one()) {}

    /// Reduce num/den to canonical form. Throws ZeroDenominatorError.
    static RatFun normalize(const Poly& num, const Poly& den);
    /// q^k for any integer k; negative k lands in the denominator.
    static RatFun q_power(long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Integer power; negative exponents invert (zero base throws).
    RatFun pow(long e) const;

    /// Exact value at q = q0; throws PoleError when den(q0) = 0 (a genuine
    /// pole by the gcd invariant).
    BigRat eval(const BigRat& q0) const;

    /// q -> q^s, s >= 1. Coprimality and the monic denominator survive the
    /// substitution, so no re-reduction is needed.
    RatFun subst_power(unsigned long s) const;

    /// Canonical text form, e.g. "2/(q + 1)", "(-2*q - 1)/(q^3 + 2*q^2 + 2*q + 1)";
    /// a denominator of 1 renders as the bare numerator.
    std::string to_string() const;

private:
    struct canonical_t {};
    RatFun(Poly num, Poly den, canonical_t) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

} // namespace qbarnes
