#include <qbarnes/ratfun.hpp>

#include <stdexcept>
#include <utility>

namespace qbarnes {

RatFun RatFun::normalize(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominatorError("RatFun: zero denominator");
    if (num.is_zero()) return RatFun();
    Poly n = num, d = den;
    const Poly g = Poly::gcd(n, d);
    if (!g.is_one()) {
        n = Poly::div_exact(n, g);
        d = Poly::div_exact(d, g);
    }
    const BigRat lc = d.lead();
    if (!lc.is_one()) {
        n = n / lc;
        d = d / lc;
    }
    return RatFun(std::move(n), std::move(d), canonical_t{});
}

RatFun RatFun::q_power(long k) {
    if (k >= 0)
        return RatFun(Poly::monomial(BigRat(1L), static_cast<unsigned>(k)));
    return RatFun(Poly::one(), Poly::monomial(BigRat(1L), static_cast<unsigned>(-k)), canonical_t{});
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Denominators are monic, so gcd tricks keep the reductions small:
    // with g0 = gcd(b, d), t = a*(d/g0) + c*(b/g0) the only factor t can
    // share with the combined denominator is inside g0.
    const Poly g0 = Poly::gcd(den_, o.den_);
    if (g0.is_one()) {
        Poly n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero()) return RatFun();
        return RatFun(std::move(n), den_ * o.den_, canonical_t{});
    }
    const Poly bd = Poly::div_exact(den_, g0);
    const Poly dd = Poly::div_exact(o.den_, g0);
    Poly t = num_ * dd + o.num_ * bd;
    if (t.is_zero()) return RatFun();
    const Poly g1 = Poly::gcd(t, g0);
    if (g1.is_one()) return RatFun(std::move(t), bd * o.den_, canonical_t{});
    Poly n = Poly::div_exact(t, g1);
    Poly d = bd * dd * Poly::div_exact(g0, g1);
    const BigRat lc = d.lead();
    if (!lc.is_one()) {
        n = n / lc;
        d = d / lc;
    }
    return RatFun(std::move(n), std::move(d), canonical_t{});
}

RatFun RatFun::operator-(const RatFun& o) const {
    return *this + (-o);
}

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    const Poly g1 = Poly::gcd(num_, o.den_);
    const Poly g2 = Poly::gcd(o.num_, den_);
    Poly n = (g1.is_one() ? num_ : Poly::div_exact(num_, g1)) *
             (g2.is_one() ? o.num_ : Poly::div_exact(o.num_, g2));
    Poly d = (g2.is_one() ? den_ : Poly::div_exact(den_, g2)) *
             (g1.is_one() ? o.den_ : Poly::div_exact(o.den_, g1));
    const BigRat lc = d.lead();
    if (!lc.is_one()) {
        n = n / lc;
        d = d / lc;
    }
    return RatFun(std::move(n), std::move(d), canonical_t{});
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DivisionByZeroError("RatFun: division by zero");
    RatFun inv(o.den_, o.num_, canonical_t{});
    const BigRat lc = inv.den_.lead();
    if (!lc.is_one()) {
        inv.num_ = inv.num_ / lc;
        inv.den_ = inv.den_ / lc;
    }
    return *this * inv;
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return RatFun(1L);
    if (is_zero()) {
        if (e < 0) throw DivisionByZeroError("RatFun: negative power of zero");
        return RatFun();
    }
    RatFun base = e < 0 ? RatFun(1L) / *this : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatFun acc(1L);
    while (k > 0) { // coprimality is preserved by powers, plain squaring is exact
        if (k & 1UL) acc *= base;
        base *= base;
        k >>= 1UL;
    }
    return acc;
}

BigRat RatFun::eval(const BigRat& q0) const {
    const BigRat d = den_.eval(q0);
    if (d.is_zero()) throw PoleError("RatFun: pole at q = " + q0.to_string());
    return num_.eval(q0) / d;
}

RatFun RatFun::subst_power(unsigned long s) const {
    if (s < 1) throw std::invalid_argument("RatFun::subst_power: s must be >= 1");
    if (s == 1) return *this;
    return RatFun(num_.subst_power(s), den_.subst_power(s), canonical_t{});
}

std::string RatFun::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    const bool bare = num_.term_count() == 1 && num_.lead().is_integer();
    if (!bare) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

} // namespace qbarnes
