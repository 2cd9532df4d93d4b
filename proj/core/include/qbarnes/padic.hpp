#pragma once

#include <optional>
#include <string>
#include <vector>

#include <qbarnes/characters.hpp>
#include <qbarnes/qbern.hpp>

namespace qbarnes {

/**
 * Fixed-precision p-adic number with valuation tracking. A nonzero value
 * represents the ball p^v * (unit + p^M Z_p) with unit coprime to p in
 * [1, p^M); a "zero" represents the ball p^K Z_p. The knowledge order
 * K = v + M (everything is known modulo p^K) is the quantity the
 * bookkeeping preserves: addition aligns knowledge orders (so cancellation
 * visibly costs unit precision), multiplication and division add/subtract
 * valuations and keep the minimum unit precision.
 */
class PadicApprox {
public:
    /// Exact zero (knowledge order saturated at a large sentinel).
    static PadicApprox exact_zero(unsigned long p);
    /// Zero known only up to p^K Z_p.
    static PadicApprox zero_at(unsigned long p, long known_order);
    /// From an exact integer, unit precision M.
    static PadicApprox from_integer(const mpz_class& n, unsigned long p, int unit_prec);
    /// From an exact rational (denominator coprime-or-not, handled by
    /// valuation splitting), unit precision M.
    static PadicApprox from_rational(const BigRat& x, unsigned long p, int unit_prec);
    /// From a residue known modulo p^known_order.
    static PadicApprox from_residue(const mpz_class& residue, unsigned long p, long known_order,
                                    int max_unit_prec);

    unsigned long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    /// Exact valuation; precondition: !is_zero().
    long valuation() const;
    /// K: the value is known modulo p^K.
    long known_order() const { return known_; }
    /// Unit precision M = K - v (0 for zero).
    int precision() const;
    /// Unit part in [1, p^M); precondition: !is_zero().
    const mpz_class& unit() const;

    PadicApprox operator-() const;
    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator/(const PadicApprox& o) const;
    PadicApprox pow(long e) const;
    /// Coarsen knowledge to p^k (no-op when already coarser).
    PadicApprox truncate_to(long k) const;

    /// "p^v * u + O(p^K)" / "u + O(p^K)" / "O(p^K)".
    std::string to_string() const;

private:
    PadicApprox(unsigned long p, long known, bool zero, long val, mpz_class unit)
        : p_(p), known_(known), zero_(zero), val_(val), unit_(std::move(unit)) {}
    mpz_class scaled_residue(long k, long shift) const;
    static PadicApprox renormalize(unsigned long p, mpz_class residue, long known_order);

    unsigned long p_ = 3;
    long known_ = 0; // K
    bool zero_ = true;
    long val_ = 0;      // v, meaningful when !zero_
    mpz_class unit_ = 0; // in [1, p^{K-v}), coprime to p, when !zero_
};

/// The unique (p-1)-th root of unity congruent to a mod p, by iterating
/// x <- x^p mod p^prec to its fixed point. gcd(a, p) must be 1.
PadicApprox teichmuller(unsigned long p, int prec, const mpz_class& a);

/**
 * One level of the defining Riemann sum over X = lim Z/(d p^N):
 *   S_N = sum_{a in [0, d p^N)^r} [w + alpha.a : q0]^n
 *           * q0^{sum_l (h-l) a_l} * prod_l chi~(a_l)
 *           * prod_l (q0^{a_l} / [d p^N : q0]),
 * at the concrete point q = q0 (q0 == 1 mod p), with character values
 * embedded through the Teichmuller lift (requires e | p-1). Working
 * precision is inflated by r*(N + ceil(log_p d) + 2) digits over the base
 * target to absorb the r divisions by [d p^N].
 */
struct OracleJob {
    unsigned long p = 3;
    mpz_class q0 = 4; // must be == 1 mod p and != 1
    unsigned long d = 1;
    unsigned N = 1;
    BetaParams params;                          // s must be 1, w integral
    std::optional<DirichletCharacter> chi = {}; // modulus | d, order | p-1, gcd(d,p)=1

    void validate() const;
};

PadicApprox riemann_sum(const OracleJob& job);

/// Working precision used for a job (exposed so closed forms can be
/// evaluated at matching precision).
int oracle_working_precision(const OracleJob& job);

/// Per-level outcome of comparing a closed form against riemann_sum.
/// exact_zero means the residual vanished at full tracked precision; its
/// valuation field then carries the knowledge bound (a lower bound on the
/// true valuation) and the level counts as +infinity for the growth check.
struct OracleRow {
    unsigned N = 0;
    bool exact_zero = false;
    long residual_valuation = 0;
    int working_precision = 0;
    bool pass = false;
};

struct OracleReport {
    std::vector<OracleRow> rows;
    bool pass = false;
};

/// Runs the ladder of jobs (increasing N expected) against a closed form.
/// PASS iff the residual valuations strictly increase (exact-zero rows count
/// as +infinity) and the final valuation is >= the largest N.
OracleReport oracle_compare(const RatFun& closed, const std::vector<OracleJob>& jobs);
OracleReport oracle_compare(const CycloElem& closed, const std::vector<OracleJob>& jobs);

/// Convenience: copies of `base` with N = 1..n_max.
std::vector<OracleJob> job_ladder(const OracleJob& base, unsigned n_max);

/// Rows as a JSON array: [{"N", "residual_valuation", "working_precision",
/// "pass", "exact_zero"}, ...].
std::string oracle_rows_json(const OracleReport& report);

} // namespace qbarnes
