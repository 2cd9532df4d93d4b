#include <qbarnes/characters.hpp>

#include <qbarnes/errors.hpp>

#include <map>
#include <stdexcept>

#include "nt_util.hpp"

namespace qbarnes {

using detail::gcd_ul;
using detail::lcm_ul;
using detail::mulmod;
using detail::powmod;

DirichletCharacter DirichletCharacter::validate(unsigned long modulus, unsigned long order,
                                                ValueTable values) {
    if (modulus < 1) throw CharacterError("modulus must be >= 1");
    if (order < 1) throw CharacterError("order must be >= 1");
    if (values.size() != modulus)
        throw CharacterError("value table has " + std::to_string(values.size()) +
                             " entries, expected " + std::to_string(modulus));
    for (unsigned long a = 0; a < modulus; ++a) {
        if (values[a] && *values[a] >= order)
            throw CharacterError("exponent at a=" + std::to_string(a) + " is out of [0, e)");
    }
    // zero-set: chi(a) = 0 exactly off the units
    for (unsigned long a = 0; a < modulus; ++a) {
        const bool unit = gcd_ul(a, modulus) == 1;
        if (unit == !values[a].has_value())
            throw CharacterError("zero-set violation at a=" + std::to_string(a));
    }
    // chi(1) = 1 (for d = 1 the single residue is 0 = 1 mod 1)
    if (values[1 % modulus] != 0UL)
        throw CharacterError("chi(1) != 1");
    // complete multiplicativity on units
    for (unsigned long a = 0; a < modulus; ++a) {
        if (!values[a]) continue;
        for (unsigned long b = a; b < modulus; ++b) {
            if (!values[b]) continue;
            const unsigned long ab = modulus == 1 ? 0 : mulmod(a, b, modulus);
            if ((*values[a] + *values[b]) % order != *values[ab])
                throw CharacterError("non-multiplicative pair (a=" + std::to_string(a) +
                                     ", b=" + std::to_string(b) + ")");
        }
    }
    // e must be the exact order of the character
    unsigned long g = order;
    for (unsigned long a = 0; a < modulus; ++a)
        if (values[a]) g = gcd_ul(g, *values[a]);
    if (g != 1)
        throw CharacterError("order is not exact: character has order " +
                             std::to_string(order / g) + ", not " + std::to_string(order));
    return DirichletCharacter(modulus, order, std::move(values));
}

CycloElem DirichletCharacter::value(unsigned long a) const {
    const auto k = exponent(a);
    if (!k) return CycloElem::zero(e_);
    return CycloElem::zeta_pow(e_, *k);
}

namespace {

struct UnitFactor {
    unsigned long generator; // CRT-lifted: acts in one local factor, 1 elsewhere
    unsigned long order;
};

// x ≡ r1 mod m1, x ≡ r2 mod m2 with coprime moduli.
unsigned long crt_pair(unsigned long r1, unsigned long m1, unsigned long r2, unsigned long m2) {
    for (unsigned long k = 0; k < m2; ++k) {
        const unsigned long x = r1 + m1 * k;
        if (x % m2 == r2) return x;
    }
    throw Error("crt_pair: no solution (moduli not coprime?)");
}

// Cyclic decomposition of (Z/dZ)^*: primes ascending; odd prime powers get
// the smallest primitive root (adjusted to stay primitive mod p^2), 2^k with
// k >= 3 gets the pair {-1, 5}.
std::vector<UnitFactor> unit_group_generators(unsigned long d) {
    std::vector<UnitFactor> out;
    for (const auto& [p, e] : detail::factorize(d)) {
        unsigned long pk = 1;
        for (unsigned i = 0; i < e; ++i) pk *= p;
        std::vector<UnitFactor> local;
        if (p == 2) {
            if (e == 2) local.push_back({3, 2});
            if (e >= 3) {
                local.push_back({pk - 1, 2});
                local.push_back({5, pk / 4});
            }
            // e == 1: trivial group
        } else {
            unsigned long g = detail::primitive_root_mod_p(p);
            if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
            local.push_back({g % pk, pk / p * (p - 1)});
        }
        const unsigned long rest = d / pk;
        for (auto& f : local) {
            if (rest > 1) f.generator = crt_pair(f.generator, pk, 1, rest);
            out.push_back(f);
        }
    }
    return out;
}

} // namespace

std::vector<DirichletCharacter> enumerate_characters(unsigned long d) {
    if (d < 1) throw std::invalid_argument("enumerate_characters: d must be >= 1");
    if (d == 1)
        return {DirichletCharacter::validate(1, 1, {std::optional<unsigned long>(0UL)})};

    const auto factors = unit_group_generators(d);
    const std::size_t t = factors.size();
    unsigned long group_exp = 1;
    for (const auto& f : factors) group_exp = lcm_ul(group_exp, f.order);

    // Discrete logs by forward enumeration of all exponent tuples.
    std::map<unsigned long, std::vector<unsigned long>> dlog;
    std::vector<unsigned long> x(t, 0);
    while (true) {
        unsigned long res = 1 % d;
        for (std::size_t i = 0; i < t; ++i) res = mulmod(res, powmod(factors[i].generator, x[i], d), d);
        dlog.emplace(res, x);
        std::size_t pos = t;
        while (pos > 0 && ++x[pos - 1] == factors[pos - 1].order) x[--pos] = 0;
        if (pos == 0) break;
    }

    std::vector<DirichletCharacter> out;
    std::vector<unsigned long> c(t, 0);
    while (true) {
        // exponent of chi(a) in base zeta_{group_exp}
        std::vector<std::optional<unsigned long>> expL(d);
        for (const auto& [res, xs] : dlog) {
            unsigned long k = 0;
            for (std::size_t i = 0; i < t; ++i)
                k = (k + c[i] * xs[i] % group_exp * (group_exp / factors[i].order)) % group_exp;
            expL[res] = k;
        }
        unsigned long g = group_exp;
        for (unsigned long a = 0; a < d; ++a)
            if (expL[a]) g = gcd_ul(g, *expL[a]);
        const unsigned long e = group_exp / g;
        std::vector<std::optional<unsigned long>> vals(d);
        for (unsigned long a = 0; a < d; ++a)
            if (expL[a]) vals[a] = *expL[a] / g;
        out.push_back(DirichletCharacter::validate(d, e, std::move(vals)));

        std::size_t pos = t;
        while (pos > 0 && ++c[pos - 1] == factors[pos - 1].order) c[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

CycloElem beta_chi(unsigned m, int h, const std::vector<long>& alphas,
                   const DirichletCharacter& chi) {
    if (alphas.empty()) throw std::invalid_argument("beta_chi: need r >= 1 twists");
    const unsigned long d = chi.modulus();
    const unsigned long e = chi.order();
    const std::size_t r = alphas.size();

    std::vector<RatFun> acc(e, RatFun()); // coefficients of zeta^0..zeta^{e-1}, reduced later
    std::vector<unsigned long> idx(r, 0);
    while (true) {
        unsigned long kexp = 0;
        bool zero = false;
        long qexp = 0;
        long dot = 0;
        for (std::size_t k = 1; k <= r; ++k) {
            const unsigned long ik = idx[k - 1];
            const auto ce = chi.exponent(ik);
            if (!ce) {
                zero = true;
                break;
            }
            kexp = (kexp + *ce) % e;
            qexp += (h - static_cast<long>(k) + 1) * static_cast<long>(ik);
            dot += alphas[k - 1] * static_cast<long>(ik);
        }
        if (!zero) {
            BetaParams inner{m, h, alphas, BigRat(dot, static_cast<long>(d)), d};
            acc[kexp] += RatFun::q_power(qexp) * beta(inner);
        }
        std::size_t pos = 0;
        while (pos < r && ++idx[pos] == d) idx[pos++] = 0;
        if (pos == r) break;
    }

    const long m_minus_r = static_cast<long>(m) - static_cast<long>(r);
    const RatFun scale = q_int(BigRat(static_cast<long>(d))).pow(m_minus_r);
    for (auto& cfr : acc) cfr *= scale;
    return CycloElem(e, std::move(acc));
}

} // namespace qbarnes
