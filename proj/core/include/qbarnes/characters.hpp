#pragma once

#include <optional>
#include <string>
#include <vector>

#include <qbarnes/cyclo.hpp>
#include <qbarnes/qbern.hpp>

namespace qbarnes {

/**
 * Dirichlet character mod d of exact order e, stored as the full value
 * table: residue a -> nullopt when gcd(a, d) > 1, otherwise the exponent
 * k in [0, e) meaning chi(a) = zeta_e^k. Construction goes through
 * validate() or enumerate_characters(), so instances always satisfy the
 * defining invariants (zero-set, chi(1) = 1, complete multiplicativity on
 * units, e the exact order).
 */
class DirichletCharacter {
public:
    using ValueTable = std::vector<std::optional<unsigned long>>;

    /// Checks every invariant; throws CharacterError naming the first
    /// violation (zero-set, chi(1), non-multiplicative pair, inexact order).
    static DirichletCharacter validate(unsigned long modulus, unsigned long order,
                                       ValueTable values);

    unsigned long modulus() const { return d_; }
    unsigned long order() const { return e_; }
    const ValueTable& values() const { return exps_; }

    /// Exponent of chi(a) (a is reduced mod d); nullopt when chi(a) = 0.
    std::optional<unsigned long> exponent(unsigned long a) const { return exps_[a % d_]; }
    /// chi(a) as an element of the order-e cyclotomic extension.
    CycloElem value(unsigned long a) const;
    bool is_principal() const { return e_ == 1; }

    bool operator==(const DirichletCharacter& o) const {
        return d_ == o.d_ && e_ == o.e_ && exps_ == o.exps_;
    }

private:
    DirichletCharacter(unsigned long d, unsigned long e, ValueTable exps)
        : d_(d), e_(e), exps_(std::move(exps)) {}
    friend std::vector<DirichletCharacter> enumerate_characters(unsigned long d);

    unsigned long d_;
    unsigned long e_;
    ValueTable exps_;
};

/// All phi(d) characters mod d, in a deterministic order: the unit group is
/// decomposed by CRT into cyclic factors (primes ascending; odd prime powers
/// use the smallest primitive root, 2^k with k >= 3 uses the pair {-1, 5}),
/// and characters are indexed by the mixed-radix counter over the factor
/// orders with the last factor fastest. Index 0 is the principal character.
std::vector<DirichletCharacter> enumerate_characters(unsigned long d);

/// Generalized (character-twisted) number via the finite distribution sum:
///   [d]^{m-r} sum_{i in [0,d)^r} q^{sum_k (h-k+1) i_k} (prod_j chi(i_j))
///            beta_m^{(h,r)}((alpha.i)/d, q^d | alphas),
/// an element of the order-e cyclotomic extension. For the modulus-1
/// character this collapses to beta_m^{(h,r)}(q | alphas).
CycloElem beta_chi(unsigned m, int h, const std::vector<long>& alphas,
                   const DirichletCharacter& chi);

} // namespace qbarnes
