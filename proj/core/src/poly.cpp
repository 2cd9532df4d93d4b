#include <qbarnes/poly.hpp>

#include <algorithm>
#include <stdexcept>

namespace qbarnes {

namespace {
const BigRat kZero(0L);
} // namespace

Poly::Poly(const BigRat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::monomial(const BigRat& c, unsigned k) {
    if (c.is_zero()) return Poly();
    std::vector<BigRat> v(k + 1, BigRat(0L));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t Poly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_)
        if (!c.is_zero()) ++n;
    return n;
}

const BigRat& Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const BigRat& Poly::lead() const {
    if (c_.empty()) throw Error("Poly: leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigRat> v(std::max(c_.size(), o.c_.size()), BigRat(0L));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<BigRat> v(std::max(c_.size(), o.c_.size()), BigRat(0L));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigRat> v(c_.size() + o.c_.size() - 1, BigRat(0L));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const BigRat& c) const {
    if (c.is_zero()) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

Poly Poly::operator/(const BigRat& c) const {
    if (c.is_zero()) throw DivisionByZeroError("Poly: division by zero scalar");
    Poly r(*this);
    for (auto& x : r.c_) x /= c;
    return r;
}

BigRat Poly::eval(const BigRat& q0) const {
    BigRat acc(0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

Poly Poly::subst_power(unsigned long s) const {
    if (s < 1) throw std::invalid_argument("Poly::subst_power: s must be >= 1");
    if (s == 1 || is_zero()) return *this;
    std::vector<BigRat> v((c_.size() - 1) * s + 1, BigRat(0L));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::shift(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigRat> v(k, BigRat(0L));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("Poly: division by zero polynomial");
    Poly r = a;
    std::vector<BigRat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, BigRat(0L));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const BigRat c = r.lead() / b.lead();
        const auto k = static_cast<std::size_t>(r.degree() - b.degree());
        q[k] = c;
        // r -= c * q^k * b
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[k + i] -= c * b.c_[i];
        r.trim();
    }
    return {Poly(std::move(q)), std::move(r)};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("Poly: inexact division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
    if (b.is_zero()) return a.monic();
    Poly x = a.primitive_part();
    Poly y = b.primitive_part();
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        if (!r.is_zero()) r = r.primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

BigRat Poly::content() const {
    if (is_zero()) throw Error("Poly: content of zero polynomial");
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    BigRat r{num_gcd, den_lcm};
    return lead().sign() < 0 ? -r : r;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    return *this / content();
}

Poly Poly::monic() const {
    return *this / lead();
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const BigRat& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const BigRat m = c.abs();
        if (k == 0) {
            out += m.to_string();
        } else {
            if (!m.is_one()) out += m.to_string() + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace qbarnes
