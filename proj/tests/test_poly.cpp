#include <qbarnes/poly.hpp>

#include <doctest.h>

using namespace qbarnes;

namespace {
Poly P(std::vector<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}
} // namespace

TEST_CASE("Poly trims trailing zeros") {
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(P({0, 0}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly::monomial(BigRat(0L), 5).is_zero());
}

TEST_CASE("Poly arithmetic") {
    const Poly a = P({1, 1});     // 1 + q
    const Poly b = P({-1, 1});    // -1 + q
    CHECK(a * b == P({-1, 0, 1}));
    CHECK(a + b == P({0, 2}));
    CHECK(a - a == Poly());
    CHECK(-a == P({-1, -1}));
    CHECK(a * BigRat(0L) == Poly());
    CHECK(P({2, 4}) / BigRat(2L) == P({1, 2}));
}

TEST_CASE("Poly divrem and exact division") {
    const Poly num = P({-1, 0, 0, 1}); // q^3 - 1
    const Poly den = P({-1, 1});       // q - 1
    auto [q, r] = Poly::divrem(num, den);
    CHECK(r.is_zero());
    CHECK(q == P({1, 1, 1}));
    auto [q2, r2] = Poly::divrem(P({1, 0, 1}), P({1, 1}));
    CHECK(q2 == P({-1, 1}));
    CHECK(r2 == P({2}));
    CHECK_THROWS_AS(Poly::div_exact(P({1, 0, 1}), P({1, 1})), Error);
    CHECK_THROWS_AS(Poly::divrem(num, Poly()), DivisionByZeroError);
}

TEST_CASE("Poly gcd") {
    // gcd(q^2 - 1, q - 1) = q - 1
    CHECK(Poly::gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // 2q^2 - q - 1 = (2q+1)(q-1), q^2 - 1 = (q-1)(q+1)
    CHECK(Poly::gcd(P({-1, -1, 2}), P({-1, 0, 1})) == P({-1, 1}));
    CHECK(Poly::gcd(Poly(), P({0, 3})) == P({0, 1}));
    CHECK(Poly::gcd(P({7}), P({5})).is_one());
    // scale invariance
    const Poly f = P({1, 2, 1});
    CHECK(Poly::gcd(f * BigRat(3, 7), f * BigRat(-5L)) == f);
}

TEST_CASE("Poly eval, subst_power, shift") {
    const Poly f = P({1, 2, 3}); // 1 + 2q + 3q^2
    CHECK(f.eval(BigRat(2L)) == BigRat(17L));
    CHECK(f.eval(BigRat(1, 2)) == BigRat(11, 4));
    CHECK(f.subst_power(2) == P({1, 0, 2, 0, 3}));
    CHECK(f.subst_power(1) == f);
    CHECK(f.shift(2) == P({0, 0, 1, 2, 3}));
    CHECK(Poly().subst_power(3).is_zero());
}

TEST_CASE("Poly content and primitive part") {
    const Poly f = P({2, 4, 6});
    CHECK(f.content() == BigRat(2L));
    CHECK(f.primitive_part() == P({1, 2, 3}));
    const Poly g = P({-2, -4});
    CHECK(g.content() == BigRat(-2L));
    CHECK(g.primitive_part() == P({1, 2}));
    Poly h = P({1, 3}) / BigRat(6L);
    CHECK(h.content() == BigRat(1, 6));
}

TEST_CASE("Poly rendering") {
    CHECK(P({1, 2, 2, 1}).to_string() == "q^3 + 2*q^2 + 2*q + 1");
    CHECK(P({-1, -2}).to_string() == "-2*q - 1");
    CHECK(P({0, -1}).to_string() == "-q");
    CHECK(P({0, 0, 1}).to_string() == "q^2");
    CHECK(Poly().to_string() == "0");
    CHECK((P({1, 1}) / BigRat(2L)).to_string() == "1/2*q + 1/2");
}
