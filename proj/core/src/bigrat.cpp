#include <qbarnes/bigrat.hpp>

#include <ostream>

namespace qbarnes {

BigRat::BigRat(long num, long den) {
    if (den == 0) throw ZeroDenominatorError("BigRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominatorError("BigRat: zero denominator");
    v_ = mpq_class(num) / mpq_class(den); // gmpxx division canonicalizes
}

BigRat BigRat::from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(s, 10) != 0) throw Error("BigRat: cannot parse '" + s + "'");
        return BigRat(n);
    }
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
        throw Error("BigRat: cannot parse '" + s + "'");
    return BigRat(num, den);
}

long BigRat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error("BigRat: " + to_string() + " is not a machine integer");
    return v_.get_num().get_si();
}

BigRat BigRat::operator-() const {
    return BigRat(mpq_class(-v_));
}

BigRat BigRat::operator/(const BigRat& o) const {
    if (o.is_zero()) throw DivisionByZeroError("BigRat: division by zero");
    return BigRat(mpq_class(v_ / o.v_));
}

BigRat BigRat::abs() const {
    return BigRat(mpq_class(::abs(v_)));
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw DivisionByZeroError("BigRat: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return BigRat(r);
}

BigRat BigRat::pow(long e) const {
    if (e == 0) return BigRat(1L);
    const BigRat base = e < 0 ? inverse() : *this;
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), k);
    mpq_class r(num);
    r /= mpq_class(den); // canonical: base was canonical, powers stay coprime
    return BigRat(r);
}

BigRat BigRat::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    if (k > n) return BigRat(0L);
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return BigRat(b);
}

BigRat BigRat::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRat(f);
}

std::string BigRat::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRat& x) {
    return os << x.to_string();
}

} // namespace qbarnes
