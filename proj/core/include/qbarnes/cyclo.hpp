#pragma once

#include <string>
#include <vector>

#include <qbarnes/ratfun.hpp>

namespace qbarnes {

/// e-th cyclotomic polynomial Phi_e, integer coefficients, computed as
/// (x^e - 1) / prod_{d | e, d < e} Phi_d by exact polynomial division.
Poly cyclotomic_poly(unsigned long e);

/**
 * Element of (Q(q))[zeta] / Phi_e(zeta): the coefficient vector of
 * zeta^0 .. zeta^{phi(e)-1}, each entry a canonical RatFun. Always reduced
 * mod Phi_e, so structural equality is field equality. Dirichlet character
 * values live here.
 */
class CycloElem {
public:
    /// Zero element of order e.
    explicit CycloElem(unsigned long e);
    /// Reduces an arbitrary-length coefficient vector mod Phi_e.
    CycloElem(unsigned long e, std::vector<RatFun> coeffs);

    static CycloElem zero(unsigned long e) { return CycloElem(e); }
    static CycloElem constant(unsigned long e, const RatFun& c);
    /// zeta_e^k, reduced.
    static CycloElem zeta_pow(unsigned long e, unsigned long k = 1);

    unsigned long order() const { return order_; }
    /// phi(e) = deg Phi_e.
    std::size_t dimension() const { return c_.size(); }
    const std::vector<RatFun>& coeffs() const { return c_; }

    bool is_zero() const;

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator*(const RatFun& c) const;
    bool operator==(const CycloElem& o) const { return order_ == o.order_ && c_ == o.c_; }

    /// Downcast to the zeta^0 coefficient; NotRationalError if any higher
    /// coefficient is nonzero.
    RatFun as_ratfun() const;

    /// "(c0) + (c1)*z + ... mod Phi_e(z)" with every coefficient rendered.
    std::string to_string() const;

private:
    void require_same_order(const CycloElem& o) const;
    unsigned long order_;
    std::vector<RatFun> c_; // length phi(e), reduced mod Phi_e
};

} // namespace qbarnes
