#include <qbarnes/power_series.hpp>

#include <qbarnes/barnes.hpp>
#include <qbarnes/errors.hpp>

#include <doctest.h>

#include <random>

using namespace qbarnes;

namespace {
PowerSeries from(std::size_t order, std::vector<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return PowerSeries(order, std::move(v));
}
} // namespace

TEST_CASE("series multiplication truncates at the order") {
    const PowerSeries a = from(3, {1, 1});  // 1 + t
    const PowerSeries b = from(3, {1, -1}); // 1 - t
    CHECK(a * b == from(3, {1, 0, -1}));
    CHECK(a * PowerSeries::one(3) == a);
    CHECK_THROWS_AS(a * PowerSeries::one(4), OrderMismatchError);
}

TEST_CASE("exp(t) * exp(-t) = 1 at order 5") {
    PowerSeries e(5), em(5);
    for (std::size_t k = 0; k < 5; ++k) {
        e.set_coeff(k, BigRat(1L) / BigRat::factorial(k));
        em.set_coeff(k, BigRat(k % 2 ? -1L : 1L) / BigRat::factorial(k));
    }
    CHECK(e * em == PowerSeries::one(5));
}

TEST_CASE("series inversion") {
    CHECK(PowerSeries::one(4).invert() == PowerSeries::one(4));
    CHECK(from(4, {1, 1}).invert() == from(4, {1, -1, 1, -1})); // geometric series
    CHECK_THROWS_AS(from(4, {0, 1}).invert(), NonUnitError);
}

TEST_CASE("inverting sum t^k/(k+1)! reproduces Bernoulli numbers") {
    // (e^t - 1)/t inverted is the Bernoulli generating function; the
    // recurrence-based list is the independent path.
    const std::size_t order = 9;
    PowerSeries f(order);
    for (std::size_t k = 0; k < order; ++k)
        f.set_coeff(k, BigRat(1L) / BigRat::factorial(k + 1));
    const PowerSeries inv = f.invert();
    CHECK(inv.coeff(1) == BigRat(-1, 2));
    const auto b = bernoulli(order - 1);
    for (std::size_t n = 0; n < order; ++n)
        CHECK(inv.coeff(n) == b[n] / BigRat::factorial(n));
}

TEST_CASE("mul(a, invert(a)) = 1 for random unit series") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int i = 0; i < 30; ++i) {
        PowerSeries a(7);
        a.set_coeff(0, BigRat(coeff(rng) * 2 + 1)); // nonzero
        for (std::size_t k = 1; k < 7; ++k) a.set_coeff(k, BigRat(coeff(rng), 3));
        CHECK(a * a.invert() == PowerSeries::one(7));
    }
}
