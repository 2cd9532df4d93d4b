#include <qbarnes/barnes.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qbarnes;

TEST_CASE("bernoulli numbers via the recurrence") {
    const auto b = bernoulli(8);
    CHECK(b[0] == BigRat(1L));
    CHECK(b[1] == BigRat(-1, 2));
    CHECK(b[2] == BigRat(1, 6));
    CHECK(b[3] == BigRat(0L));
    CHECK(b[4] == BigRat(-1, 30));
    CHECK(b[5] == BigRat(0L));
    CHECK(b[6] == BigRat(1, 42));
    CHECK(b[8] == BigRat(-1, 30));
    // recurrence: sum_k C(n+1,k) B_k = 0 for n >= 1
    for (unsigned n = 1; n <= 8; ++n) {
        BigRat acc(0L);
        for (unsigned k = 0; k <= n; ++k) acc += BigRat::binomial(n + 1, k) * b[k];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("barnes_poly basics") {
    CHECK(barnes_poly(BarnesParams{0, {BigRat(3L), BigRat(1, 2)}, BigRat(7L)}) == BigRat(1L));
    CHECK(barnes_poly(BarnesParams{1, {BigRat(1L)}, BigRat(0L)}) == BigRat(-1, 2));
    CHECK_THROWS_AS(barnes_poly(BarnesParams{1, {}, BigRat(0L)}), std::invalid_argument);
    CHECK_THROWS_AS(barnes_poly(BarnesParams{1, {BigRat(0L)}, BigRat(0L)}), std::invalid_argument);
}

TEST_CASE("r=1, weight 1 reduces to the classical Bernoulli polynomial") {
    const auto b = bernoulli(8);
    for (unsigned n = 0; n <= 8; ++n) {
        for (long x : {0L, 1L, 2L, -1L}) {
            BigRat classical(0L);
            for (unsigned k = 0; k <= n; ++k)
                classical += BigRat::binomial(n, k) * b[k] * BigRat(x).pow(n - k);
            CHECK(barnes_poly(BarnesParams{n, {BigRat(1L)}, BigRat(x)}) == classical);
        }
    }
}

TEST_CASE("permutation symmetry in the weights") {
    std::vector<BigRat> w{BigRat(1L), BigRat(2L), BigRat(1, 2)};
    const BigRat base = barnes_poly(BarnesParams{4, w, BigRat(1L)});
    std::sort(w.begin(), w.end());
    do {
        CHECK(barnes_poly(BarnesParams{4, w, BigRat(1L)}) == base);
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("difference identity in the last weight") {
    // B_n^{(2)}(x + w2 | w1, w2) - B_n^{(2)}(x | w1, w2) = n w2 B_{n-1}^{(1)}(x | w1)
    const std::vector<BigRat> ws{BigRat(1L), BigRat(2L), BigRat(1, 2)};
    for (unsigned n = 1; n <= 5; ++n) {
        for (const auto& w1 : ws) {
            for (const auto& w2 : ws) {
                for (long x : {0L, 1L}) {
                    const BigRat lhs =
                        barnes_poly(BarnesParams{n, {w1, w2}, BigRat(x) + w2}) -
                        barnes_poly(BarnesParams{n, {w1, w2}, BigRat(x)});
                    const BigRat rhs = BigRat(static_cast<long>(n)) * w2 *
                                       barnes_poly(BarnesParams{n - 1, {w1}, BigRat(x)});
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}
