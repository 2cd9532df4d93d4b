#include <qbarnes/qbern.hpp>

#include <qbarnes/errors.hpp>

#include <stdexcept>

namespace qbarnes {

namespace {

long exponent_as_long(const BigRat& x, const char* what) {
    if (!x.is_integer())
        throw NonIntegerExponentError(std::string(what) + ": exponent " + x.to_string() +
                                      " is not an integer");
    return x.to_long();
}

} // namespace

void BetaParams::validate() const {
    if (alphas.empty()) throw std::invalid_argument("BetaParams: need r >= 1 twists");
    if (s < 1) throw std::invalid_argument("BetaParams: base power s must be >= 1");
    if (!(w * BigRat(static_cast<long>(s))).is_integer())
        throw NonIntegerExponentError("BetaParams: s*w = " +
                                      (w * BigRat(static_cast<long>(s))).to_string() +
                                      " is not an integer");
    for (unsigned j = 0; j <= n; ++j) {
        for (std::size_t l = 1; l <= alphas.size(); ++l) {
            const long c = static_cast<long>(j) * alphas[l - 1] + h - static_cast<long>(l) + 1;
            if (c == 0) throw SingularFactorError(j, static_cast<unsigned>(l));
        }
    }
}

std::string BetaParams::to_string() const {
    std::string a = "[";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i) a += ",";
        a += std::to_string(alphas[i]);
    }
    a += "]";
    return "n=" + std::to_string(n) + " h=" + std::to_string(h) + " r=" + std::to_string(r()) +
           " alphas=" + a + " w=" + w.to_string() + " s=" + std::to_string(s);
}

RatFun q_int(const BigRat& x, unsigned long s) {
    if (s < 1) throw std::invalid_argument("q_int: s must be >= 1");
    const long k = exponent_as_long(x * BigRat(static_cast<long>(s)), "q_int");
    // (1 - q^k)/(1 - q^s); RatFun arithmetic clears a negative k.
    const RatFun one(1L);
    return (one - RatFun::q_power(k)) / (one - RatFun::q_power(static_cast<long>(s)));
}

RatFun moment(unsigned m) {
    RatFun sum;
    for (unsigned i = 0; i <= m; ++i) {
        const long c = static_cast<long>(i) + 1;
        RatFun term = RatFun(BigRat::binomial(m, i) * BigRat(c)) / q_int(BigRat(c));
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    const RatFun one_minus_q = RatFun(1L) - RatFun::q_power(1);
    return sum / one_minus_q.pow(m);
}

RatFun beta(const BetaParams& p) {
    p.validate();
    const long sw = (p.w * BigRat(static_cast<long>(p.s))).to_long();
    RatFun sum;
    for (unsigned j = 0; j <= p.n; ++j) {
        // (-Q^w)^j = (-1)^j q^{s w j}
        RatFun term = RatFun(BigRat::binomial(p.n, j)) * RatFun::q_power(sw * static_cast<long>(j));
        if (j % 2 == 1) term = -term;
        for (std::size_t l = 1; l <= p.alphas.size(); ++l) {
            const long c = static_cast<long>(j) * p.alphas[l - 1] + p.h - static_cast<long>(l) + 1;
            term *= RatFun(BigRat(c)) / q_int(BigRat(c), p.s);
        }
        sum += term;
    }
    const RatFun one_minus_Q = RatFun(1L) - RatFun::q_power(static_cast<long>(p.s));
    return sum / one_minus_Q.pow(p.n);
}

RatFun beta_w_expansion(unsigned n, int h, const std::vector<long>& alphas, long w) {
    const RatFun qw = q_int(BigRat(w));
    RatFun sum;
    for (unsigned j = 0; j <= n; ++j) {
        const RatFun bj = beta(BetaParams{j, h, alphas, BigRat(0L), 1});
        sum += RatFun(BigRat::binomial(n, j)) * RatFun::q_power(w * static_cast<long>(j)) * bj *
               qw.pow(static_cast<long>(n - j));
    }
    return sum;
}

RatFun theorem2_rhs(const BetaParams& p, unsigned long d) {
    if (p.s != 1) throw std::invalid_argument("theorem2_rhs: base power must be 1");
    if (d < 1) throw std::invalid_argument("theorem2_rhs: d must be >= 1");
    const long w = exponent_as_long(p.w, "theorem2_rhs");
    const std::size_t r = p.alphas.size();
    std::vector<unsigned long> idx(r, 0);
    RatFun sum;
    while (true) {
        long qexp = 0;
        long dot = 0;
        for (std::size_t k = 1; k <= r; ++k) {
            const auto ik = static_cast<long>(idx[k - 1]);
            qexp += (p.h - static_cast<long>(k) + 1) * ik;
            dot += p.alphas[k - 1] * ik;
        }
        BetaParams inner = p;
        inner.w = BigRat(w + dot, static_cast<long>(d));
        inner.s = d;
        sum += RatFun::q_power(qexp) * beta(inner);
        // odometer over [0, d)^r
        std::size_t pos = 0;
        while (pos < r && ++idx[pos] == d) idx[pos++] = 0;
        if (pos == r) break;
    }
    const long n_minus_r = static_cast<long>(p.n) - static_cast<long>(r);
    return q_int(BigRat(static_cast<long>(d))).pow(n_minus_r) * sum;
}

RatFun theorem3_lhs(unsigned m, int h, const std::vector<long>& alphas) {
    const RatFun q_minus_1 = RatFun::q_power(1) - RatFun(1L);
    RatFun sum;
    for (unsigned i = 0; i <= m; ++i) {
        const RatFun bi = beta(BetaParams{i, h, alphas, BigRat(0L), 1});
        sum += RatFun(BigRat::binomial(m, i)) * q_minus_1.pow(i) * bi;
    }
    return sum;
}

RatFun theorem3_rhs(unsigned m, int h, const std::vector<long>& alphas) {
    if (alphas.empty()) throw std::invalid_argument("theorem3_rhs: need r >= 1 twists");
    RatFun prod(1L);
    for (std::size_t j = 1; j <= alphas.size(); ++j) {
        const long c = static_cast<long>(m) * alphas[j - 1] + h - static_cast<long>(j) + 1;
        if (c == 0) throw SingularFactorError(m, static_cast<unsigned>(j));
        prod *= RatFun(BigRat(c)) / q_int(BigRat(c));
    }
    return prod;
}

HRecurrenceReport verify_h_recurrence(unsigned m, int h, unsigned r) {
    if (r < 1) throw std::invalid_argument("verify_h_recurrence: r must be >= 1");
    const std::vector<long> ones(r, 1L);
    const RatFun lhs = beta(BetaParams{m, h, ones, BigRat(0L), 1});
    const RatFun q_minus_1 = RatFun::q_power(1) - RatFun(1L);
    const RatFun b_low_m = beta(BetaParams{m, h - 1, ones, BigRat(0L), 1});
    const RatFun b_low_m1 = beta(BetaParams{m + 1, h - 1, ones, BigRat(0L), 1});
    HRecurrenceReport rep;
    rep.derived_residual = lhs - (q_minus_1 * b_low_m1 + b_low_m);
    rep.as_printed_residual = lhs - (q_minus_1 * b_low_m + b_low_m);
    rep.derived_holds = rep.derived_residual.is_zero();
    rep.as_printed_holds = rep.as_printed_residual.is_zero();
    return rep;
}

BigRat limit_q1(const RatFun& f) {
    const BigRat d = f.den().eval(BigRat(1L));
    if (d.is_zero()) throw PoleError("limit_q1: pole at q = 1");
    return f.num().eval(BigRat(1L)) / d;
}

} // namespace qbarnes
