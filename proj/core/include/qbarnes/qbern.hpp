#pragma once

#include <string>
#include <vector>

#include <qbarnes/ratfun.hpp>

namespace qbarnes {

/**
 * Parameters naming one extended Changhee q-Bernoulli number
 * beta_n^{(h,r)}(w, q^s | alpha_1..alpha_r):
 *   n      degree,
 *   h      weight (any integer),
 *   alphas r >= 1 integer twists,
 *   w      rational shift with s*w integral,
 *   s      base power (the formal variable is q^s; s = d after applying the
 *          distribution relation at conductor d).
 *
 * Non-singularity: j*alpha_l + h - l + 1 != 0 for all j in [0, n],
 * l in [1, r]; at a zero exponent the defining integral is not a rational
 * function and beta() throws SingularFactorError.
 */
struct BetaParams {
    unsigned n = 0;
    int h = 1;
    std::vector<long> alphas{1};
    BigRat w = BigRat(0L);
    unsigned long s = 1;

    std::size_t r() const { return alphas.size(); }
    /// Throws on violated invariants (including the singularity scan).
    void validate() const;
    std::string to_string() const;
};

/// q-integer [x : q^s] = (1 - q^{s x})/(1 - q^s) as a canonical RatFun in q;
/// s*x must be an integer (negative exponents are cleared into the
/// denominator).
RatFun q_int(const BigRat& x, unsigned long s = 1);

/// The basic moment: integral of [x]^m over Z_p against mu_q,
/// (1-q)^{-m} * sum_i C(m,i) (-1)^i (i+1)/[i+1].
RatFun moment(unsigned m);

/// Closed form for beta_n^{(h,r)}(w, q^s | alphas):
///   (1-Q)^{-n} sum_j C(n,j) (-Q^w)^j prod_l (j a_l + h - l + 1)/[j a_l + h - l + 1 : Q]
/// with Q = q^s.
RatFun beta(const BetaParams& p);

/// beta via the shift expansion sum_j C(n,j) q^{w j} beta_j^{(h,r)}(q|alphas) [w]^{n-j}
/// (integer w, base q). Equals beta({n,h,alphas,w,1}) identically.
RatFun beta_w_expansion(unsigned n, int h, const std::vector<long>& alphas, long w);

/// Right-hand side of the distribution relation at conductor d:
///   [d]^{n-r} sum_{i in [0,d)^r} q^{sum_k (h-k+1) i_k}
///            beta_n^{(h,r)}((w + alpha.i)/d, q^d | alphas).
/// Requires p.s == 1 and integer w.
RatFun theorem2_rhs(const BetaParams& p, unsigned long d);

/// Inversion-formula sides: lhs = sum_i C(m,i) (q-1)^i beta_i^{(h,r)}(q|alphas),
/// rhs = prod_j (m a_j + h - j + 1)/[m a_j + h - j + 1].
RatFun theorem3_lhs(unsigned m, int h, const std::vector<long>& alphas);
RatFun theorem3_rhs(unsigned m, int h, const std::vector<long>& alphas);

/// Adjudication of the weight-lowering recurrence at alphas = (1,...,1).
/// derived:    beta_m^{(h,r)} = (q-1) beta_{m+1}^{(h-1,r)} + beta_m^{(h-1,r)}
/// as_printed: beta_m^{(h,r)} = (q-1) beta_m^{(h-1,r)}     + beta_m^{(h-1,r)}
struct HRecurrenceReport {
    bool derived_holds = false;
    bool as_printed_holds = false;
    RatFun derived_residual;
    RatFun as_printed_residual;
};
HRecurrenceReport verify_h_recurrence(unsigned m, int h, unsigned r);

/// Value at q = 1; throws PoleError when the reduced denominator vanishes
/// there (a genuine pole).
BigRat limit_q1(const RatFun& f);

} // namespace qbarnes
