#include <qbarnes/characters.hpp>

#include <doctest.h>

#include <numeric>

using namespace qbarnes;

namespace {
using VT = DirichletCharacter::ValueTable;
std::optional<unsigned long> Z;
} // namespace

TEST_CASE("validate accepts the trivial and mod-4 characters") {
    const auto triv = DirichletCharacter::validate(1, 1, VT{0UL});
    CHECK(triv.modulus() == 1);
    CHECK(triv.is_principal());

    const auto chi4 = DirichletCharacter::validate(4, 2, VT{Z, 0UL, Z, 1UL});
    CHECK(chi4.order() == 2);
    CHECK(chi4.exponent(3) == 1UL);
    CHECK(chi4.exponent(7) == 1UL); // reduced mod 4
}

TEST_CASE("validate reports the first violated invariant") {
    // wrong zero-set at a=2
    CHECK_THROWS_WITH_AS(DirichletCharacter::validate(4, 1, VT{Z, 0UL, 0UL, 0UL}),
                         doctest::Contains("zero-set violation at a=2"), CharacterError);
    // chi(1) != 1
    CHECK_THROWS_WITH_AS(DirichletCharacter::validate(4, 2, VT{Z, 1UL, Z, 0UL}),
                         doctest::Contains("chi(1)"), CharacterError);
    // non-multiplicative: mod 5, chi(2)=zeta4, chi(4) must be zeta4^2 but says 0
    CHECK_THROWS_WITH_AS(DirichletCharacter::validate(5, 4, VT{Z, 0UL, 1UL, 3UL, 0UL}),
                         doctest::Contains("non-multiplicative pair"), CharacterError);
    // inexact order: all exponents even in Z/4
    CHECK_THROWS_WITH_AS(DirichletCharacter::validate(5, 4, VT{Z, 0UL, 2UL, 2UL, 0UL}),
                         doctest::Contains("order is not exact"), CharacterError);
}

TEST_CASE("enumeration counts and small tables") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(enumerate_characters(2).size() == 1);

    const auto mod3 = enumerate_characters(3);
    REQUIRE(mod3.size() == 2);
    CHECK(mod3[0].is_principal());
    CHECK(mod3[1].order() == 2);
    CHECK(mod3[1].exponent(2) == 1UL); // chi(2) = -1

    const auto mod5 = enumerate_characters(5);
    REQUIRE(mod5.size() == 4);
    bool found_order4 = false;
    for (const auto& chi : mod5) {
        if (chi.order() == 4) {
            found_order4 = true;
            const auto e2 = chi.exponent(2);
            REQUIRE(e2.has_value());
            CHECK((*e2 == 1 || *e2 == 3)); // chi(2) = zeta_4 or zeta_4^3
        }
    }
    CHECK(found_order4);
}

TEST_CASE("full multiplicativity and orthogonality for d <= 12") {
    for (unsigned long d = 1; d <= 12; ++d) {
        const auto chars = enumerate_characters(d);
        // phi(d)
        unsigned long phi = 0;
        for (unsigned long a = 0; a < d; ++a)
            if (std::gcd(a, d) == 1) ++phi;
        if (d == 1) phi = 1;
        CHECK(chars.size() == phi);
        for (const auto& chi : chars) {
            for (unsigned long a = 0; a < d; ++a) {
                for (unsigned long b = 0; b < d; ++b) {
                    const auto va = chi.exponent(a), vb = chi.exponent(b);
                    const auto vab = chi.exponent((a * b) % (d == 0 ? 1 : d));
                    if (!va || !vb) {
                        CHECK(!vab);
                    } else {
                        REQUIRE(vab.has_value());
                        CHECK((*va + *vb) % chi.order() == *vab);
                    }
                }
            }
            CycloElem sum = CycloElem::zero(chi.order());
            for (unsigned long a = 0; a < d; ++a) sum = sum + chi.value(a);
            if (chi.is_principal()) {
                CHECK(sum == CycloElem::constant(1, RatFun(BigRat(static_cast<long>(phi)))));
            } else {
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("characters are pairwise distinct") {
    for (unsigned long d : {8UL, 12UL}) {
        const auto chars = enumerate_characters(d);
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = i + 1; j < chars.size(); ++j)
                CHECK(!(chars[i] == chars[j]));
    }
}

TEST_CASE("beta_chi with the modulus-1 character is beta") {
    const auto triv = enumerate_characters(1)[0];
    for (unsigned m = 0; m <= 3; ++m) {
        const CycloElem v = beta_chi(m, 2, {1, 2}, triv);
        CHECK(v.as_ratfun() == beta(BetaParams{m, 2, {1, 2}, BigRat(0L), 1}));
    }
}

TEST_CASE("beta_chi mod 3, m=0: hand-expanded three-term sum") {
    const auto chi = enumerate_characters(3)[1];
    const CycloElem v = beta_chi(0, 1, {1}, chi);
    // [3]^{-1} (q - q^2) = (-q^2 + q)/(q^2 + q + 1)
    const RatFun expected = RatFun::normalize(
        Poly(std::vector<BigRat>{BigRat(0L), BigRat(1L), BigRat(-1L)}),
        Poly(std::vector<BigRat>{BigRat(1L), BigRat(1L), BigRat(1L)}));
    CHECK(v.as_ratfun() == expected);
}

TEST_CASE("beta_chi propagates singular factors") {
    const auto chi = enumerate_characters(3)[1];
    // h=0, r=1: exponent j*alpha + h - l + 1 = 0 at j=0
    CHECK_THROWS_AS(beta_chi(1, 0, {1}, chi), SingularFactorError);
}
