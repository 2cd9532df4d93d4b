#include <qbarnes/cyclo.hpp>

#include <qbarnes/errors.hpp>

#include <stdexcept>
#include <utility>

namespace qbarnes {

Poly cyclotomic_poly(unsigned long e) {
    if (e < 1) throw std::invalid_argument("cyclotomic_poly: e must be >= 1");
    // x^e - 1
    std::vector<BigRat> v(e + 1, BigRat(0L));
    v[0] = BigRat(-1L);
    v[e] = BigRat(1L);
    Poly num{std::move(v)};
    for (unsigned long d = 1; d < e; ++d) {
        if (e % d == 0) num = Poly::div_exact(num, cyclotomic_poly(d));
    }
    return num;
}

namespace {

// Reduce a coefficient vector (ascending powers of zeta) mod the monic Phi_e.
std::vector<RatFun> reduce_mod_phi(const Poly& phi, std::vector<RatFun> v) {
    const auto deg = static_cast<std::size_t>(phi.degree());
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i].is_zero()) continue;
        const RatFun c = v[i];
        v[i] = RatFun();
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi.coeff(j).is_zero()) continue;
            v[i - deg + j] -= c * RatFun(phi.coeff(j));
        }
    }
    v.resize(deg);
    return v;
}

} // namespace

CycloElem::CycloElem(unsigned long e) : order_(e) {
    if (e < 1) throw std::invalid_argument("CycloElem: order must be >= 1");
    c_.assign(static_cast<std::size_t>(cyclotomic_poly(e).degree()), RatFun());
}

CycloElem::CycloElem(unsigned long e, std::vector<RatFun> coeffs) : order_(e) {
    if (e < 1) throw std::invalid_argument("CycloElem: order must be >= 1");
    const Poly phi = cyclotomic_poly(e);
    auto v = reduce_mod_phi(phi, std::move(coeffs));
    v.resize(static_cast<std::size_t>(phi.degree()), RatFun());
    c_ = std::move(v);
}

CycloElem CycloElem::constant(unsigned long e, const RatFun& c) {
    CycloElem r(e);
    r.c_[0] = c;
    return r;
}

CycloElem CycloElem::zeta_pow(unsigned long e, unsigned long k) {
    std::vector<RatFun> v(k % e + 1, RatFun());
    v[k % e] = RatFun(1L);
    return CycloElem(e, std::move(v));
}

bool CycloElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

void CycloElem::require_same_order(const CycloElem& o) const {
    if (order_ != o.order_)
        throw OrderMismatchError("CycloElem: mixed extension orders (" + std::to_string(order_) +
                                 " vs " + std::to_string(o.order_) + ")");
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    require_same_order(o);
    CycloElem r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    require_same_order(o);
    CycloElem r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    require_same_order(o);
    if (c_.empty()) return *this;
    std::vector<RatFun> v(2 * c_.size() - 1, RatFun());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycloElem(order_, std::move(v));
}

CycloElem CycloElem::operator*(const RatFun& c) const {
    CycloElem r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

RatFun CycloElem::as_ratfun() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero())
            throw NotRationalError("CycloElem: nonzero zeta^" + std::to_string(i) +
                                   " coefficient, element is not rational");
    }
    return c_.empty() ? RatFun() : c_[0];
}

std::string CycloElem::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out += " + ";
        out += "(" + c_[i].to_string() + ")";
        if (i == 1) out += "*z";
        if (i > 1) out += "*z^" + std::to_string(i);
    }
    out += " mod Phi_" + std::to_string(order_) + "(z)";
    return out;
}

} // namespace qbarnes
