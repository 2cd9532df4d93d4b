#include <qbarnes/power_series.hpp>

#include <qbarnes/errors.hpp>

#include <stdexcept>
#include <utility>

namespace qbarnes {

PowerSeries::PowerSeries(std::size_t order) : c_(order, BigRat(0L)) {
    if (order == 0) throw std::invalid_argument("PowerSeries: order must be >= 1");
}

PowerSeries::PowerSeries(std::size_t order, std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("PowerSeries: order must be >= 1");
    if (c_.size() > order) throw std::invalid_argument("PowerSeries: more coefficients than order");
    c_.resize(order, BigRat(0L));
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.c_[0] = BigRat(1L);
    return s;
}

void PowerSeries::require_same_order(const PowerSeries& o) const {
    if (order() != o.order())
        throw OrderMismatchError("PowerSeries: order mismatch (" + std::to_string(order()) +
                                 " vs " + std::to_string(o.order()) + ")");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    require_same_order(o);
    PowerSeries r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    require_same_order(o);
    PowerSeries r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    require_same_order(o);
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

PowerSeries PowerSeries::operator*(const BigRat& c) const {
    PowerSeries r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

PowerSeries PowerSeries::invert() const {
    if (c_[0].is_zero()) throw NonUnitError();
    PowerSeries b(order());
    b.c_[0] = c_[0].inverse();
    for (std::size_t n = 1; n < c_.size(); ++n) {
        BigRat acc(0L);
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * b.c_[n - k];
        b.c_[n] = -acc / c_[0];
    }
    return b;
}

} // namespace qbarnes
