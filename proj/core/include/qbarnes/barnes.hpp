#pragma once

#include <vector>

#include <qbarnes/bigrat.hpp>

namespace qbarnes {

/// B_0..B_upto via the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0. Kept
/// independent of the power-series path so the two can check each other.
std::vector<BigRat> bernoulli(unsigned upto);

/// Barnes multiple Bernoulli polynomial B_n^{(r)}(x | w_1..w_r): n! times
/// the t^n coefficient of prod_j [w_j t/(e^{w_j t}-1)] * e^{x t}.
struct BarnesParams {
    unsigned n = 0;
    std::vector<BigRat> weights{BigRat(1L)}; // r >= 1, all nonzero
    BigRat x = BigRat(0L);
};

BigRat barnes_poly(const BarnesParams& p);

} // namespace qbarnes
