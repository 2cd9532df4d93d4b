#include <qbarnes/barnes.hpp>

#include <qbarnes/power_series.hpp>

#include <stdexcept>

namespace qbarnes {

std::vector<BigRat> bernoulli(unsigned upto) {
    std::vector<BigRat> b;
    b.reserve(upto + 1);
    b.emplace_back(1L);
    for (unsigned n = 1; n <= upto; ++n) {
        BigRat acc(0L);
        for (unsigned k = 0; k < n; ++k) acc += BigRat::binomial(n + 1, k) * b[k];
        b.push_back(-acc / BigRat(static_cast<long>(n) + 1));
    }
    return b;
}

namespace {

// sum_{k < order} c^k t^k / (k+1)!  ==  (e^{c t} - 1)/(c t)
PowerSeries expm1_over_ct(const BigRat& c, std::size_t order) {
    PowerSeries s(order);
    BigRat ck(1L);
    for (std::size_t k = 0; k < order; ++k) {
        s.set_coeff(k, ck / BigRat::factorial(k + 1));
        ck *= c;
    }
    return s;
}

// sum_{k < order} x^k t^k / k!  ==  e^{x t}
PowerSeries exp_series(const BigRat& x, std::size_t order) {
    PowerSeries s(order);
    BigRat xk(1L);
    for (std::size_t k = 0; k < order; ++k) {
        s.set_coeff(k, xk / BigRat::factorial(k));
        xk *= x;
    }
    return s;
}

} // namespace

BigRat barnes_poly(const BarnesParams& p) {
    if (p.weights.empty()) throw std::invalid_argument("barnes_poly: need r >= 1 weights");
    for (const auto& w : p.weights)
        if (w.is_zero()) throw std::invalid_argument("barnes_poly: weights must be nonzero");
    const std::size_t order = p.n + 1;
    PowerSeries acc = PowerSeries::one(order);
    for (const auto& w : p.weights) acc = acc * expm1_over_ct(w, order).invert();
    if (!p.x.is_zero()) acc = acc * exp_series(p.x, order);
    return acc.coeff(p.n) * BigRat::factorial(p.n);
}

} // namespace qbarnes
