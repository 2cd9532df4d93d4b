#include <qbarnes/ratfun.hpp>

#include <doctest.h>

#include <random>

using namespace qbarnes;

namespace {

Poly P(std::vector<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<BigRat> v(static_cast<std::size_t>(deg(rng)) + 1, BigRat(0L));
    for (auto& c : v) c = BigRat(coeff(rng));
    return Poly(std::move(v));
}

RatFun random_ratfun(std::mt19937_64& rng) {
    Poly den;
    while (den.is_zero()) den = random_poly(rng, 3);
    return RatFun::normalize(random_poly(rng, 3), den);
}

} // namespace

TEST_CASE("normalize reduces to canonical form") {
    // (q^2 - 1)/(q - 1) = q + 1
    const RatFun a = RatFun::normalize(P({-1, 0, 1}), P({-1, 1}));
    CHECK(a.num() == P({1, 1}));
    CHECK(a.den().is_one());

    // zero numerator canonicalizes to 0/1
    const RatFun z = RatFun::normalize(Poly(), P({0, 5}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());

    // (2q^2 - q - 1)/(q^2 - 1) = (2q + 1)/(q + 1)
    const RatFun b = RatFun::normalize(P({-1, -1, 2}), P({-1, 0, 1}));
    CHECK(b.num() == P({1, 2}));
    CHECK(b.den() == P({1, 1}));

    CHECK_THROWS_AS(RatFun::normalize(P({1}), Poly()), ZeroDenominatorError);
}

TEST_CASE("denominator is monic after normalization") {
    const RatFun f = RatFun::normalize(P({1}), P({0, 2}));
    CHECK(f.den() == P({0, 1}));
    CHECK(f.num() == Poly(BigRat(1, 2)));
}

TEST_CASE("RatFun arithmetic identities") {
    const RatFun one(1L);
    const RatFun f = one / RatFun(P({1, 1}));          // 1/(q+1)
    const RatFun g = RatFun(P({0, 1})) / RatFun(P({1, 1})); // q/(q+1)
    CHECK(f + g == one);

    const RatFun any = RatFun::normalize(P({3, 1}), P({-2, 0, 1}));
    CHECK(any * one == any);

    // 2/(q+1) - 3/(q^2+q+1) = (2q^2 - q - 1)/((q+1)(q^2+q+1))
    const RatFun d = RatFun(2L) / RatFun(P({1, 1})) - RatFun(3L) / RatFun(P({1, 1, 1}));
    CHECK(d.num() == P({-1, -1, 2}));
    CHECK(d.den() == P({1, 2, 2, 1}));

    CHECK_THROWS_AS(any / RatFun(), DivisionByZeroError);
}

TEST_CASE("RatFun eval") {
    const RatFun f = RatFun(P({1, 1}));
    CHECK(f.eval(BigRat(2L)) == BigRat(3L));
    const RatFun g = RatFun(1L) / RatFun(P({-1, 1})); // 1/(q-1)
    CHECK_THROWS_AS(g.eval(BigRat(1L)), PoleError);
    // -1/(q+1) at q=1 (the first moment)
    const RatFun m1 = RatFun(-1L) / RatFun(P({1, 1}));
    CHECK(m1.eval(BigRat(1L)) == BigRat(-1, 2));
}

TEST_CASE("subst_power") {
    CHECK(RatFun(P({1, 1})).subst_power(2) == RatFun(P({1, 0, 1})));
    CHECK(RatFun(P({1, 1, 1})).subst_power(2) == RatFun(P({1, 0, 1, 0, 1})));
    const RatFun f = RatFun::normalize(P({3, 1}), P({1, 2}));
    CHECK(f.subst_power(1) == f);
    CHECK(f.subst_power(2).subst_power(3) == f.subst_power(6));
}

TEST_CASE("eval commutes with subst_power") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        const RatFun f = random_ratfun(rng);
        const BigRat q0(3L);
        const unsigned long s = 2;
        const BigRat q0s = q0.pow(static_cast<long>(s));
        bool lhs_ok = true, rhs_ok = true;
        BigRat lhs(0L), rhs(0L);
        try {
            lhs = f.subst_power(s).eval(q0);
        } catch (const PoleError&) {
            lhs_ok = false;
        }
        try {
            rhs = f.eval(q0s);
        } catch (const PoleError&) {
            rhs_ok = false;
        }
        CHECK(lhs_ok == rhs_ok);
        if (lhs_ok && rhs_ok) CHECK(lhs == rhs);
    }
}

TEST_CASE("ring axioms on random rational functions") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 40; ++i) {
        const RatFun f = random_ratfun(rng);
        const RatFun g = random_ratfun(rng);
        const RatFun h = random_ratfun(rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("canonical uniqueness: common factors never matter") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const Poly a = random_poly(rng, 3);
        Poly b, c;
        while (b.is_zero()) b = random_poly(rng, 3);
        while (c.is_zero()) c = random_poly(rng, 2);
        CHECK(RatFun::normalize(a * c, b * c) == RatFun::normalize(a, b));
    }
}

TEST_CASE("pow") {
    const RatFun f = RatFun(P({1, 1}));
    CHECK(f.pow(0).is_one());
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(-2) == RatFun(1L) / (f * f));
    CHECK(RatFun().pow(0).is_one());
    CHECK(RatFun().pow(2).is_zero());
    CHECK_THROWS_AS(RatFun().pow(-1), DivisionByZeroError);
}

TEST_CASE("canonical text form") {
    CHECK((RatFun(2L) / RatFun(P({1, 1}))).to_string() == "2/(q + 1)");
    const RatFun b = RatFun::normalize(P({-1, -2}), P({1, 2, 2, 1}));
    CHECK(b.to_string() == "(-2*q - 1)/(q^3 + 2*q^2 + 2*q + 1)");
    CHECK(RatFun(P({1, 1})).to_string() == "q + 1");
    CHECK(RatFun().to_string() == "0");
    // single-term numerators stay bare, non-integer coefficients get parens
    CHECK((RatFun(P({0, -1})) / RatFun(P({1, 1}))).to_string() == "-q/(q + 1)");
    CHECK(RatFun::normalize(P({0, 1}), P({0, 0, 2})).to_string() == "(1/2)/(q)");
}
