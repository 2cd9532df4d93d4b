#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include <qbarnes/errors.hpp>

namespace qbarnes {

/**
 * Arbitrary-precision rational number, the coefficient field for everything
 * in this library. Always canonical: denominator > 0, gcd(|num|, den) = 1.
 * Backed by GMP; immutable value semantics, safe to share across threads.
 */
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {} // NOLINT: integers embed implicitly
    BigRat(long num, long den);
    explicit BigRat(const mpz_class& n) : v_(n) {}
    BigRat(const mpz_class& num, const mpz_class& den);

    /// Parses "a" or "a/b" in base 10.
    static BigRat from_string(const std::string& s);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Value as a machine long; precondition: integer that fits.
    long to_long() const;

    BigRat operator-() const;
    BigRat operator+(const BigRat& o) const { return BigRat(mpq_class(v_ + o.v_)); }
    BigRat operator-(const BigRat& o) const { return BigRat(mpq_class(v_ - o.v_)); }
    BigRat operator*(const BigRat& o) const { return BigRat(mpq_class(v_ * o.v_)); }
    BigRat operator/(const BigRat& o) const;
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) { *this = *this / o; return *this; }

    bool operator==(const BigRat& o) const { return v_ == o.v_; }
    bool operator!=(const BigRat& o) const { return v_ != o.v_; }
    bool operator<(const BigRat& o) const { return v_ < o.v_; }
    bool operator<=(const BigRat& o) const { return v_ <= o.v_; }
    bool operator>(const BigRat& o) const { return v_ > o.v_; }
    bool operator>=(const BigRat& o) const { return v_ >= o.v_; }

    BigRat abs() const;
    BigRat inverse() const;
    /// Integer power; negative exponents invert (zero base throws).
    BigRat pow(long e) const;

    static BigRat binomial(unsigned long n, unsigned long k);
    static BigRat factorial(unsigned long n);

    std::string to_string() const;

private:
    explicit BigRat(mpq_class v) : v_(std::move(v)) {} // must already be canonical
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& x);

} // namespace qbarnes
