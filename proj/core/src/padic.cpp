#include <qbarnes/padic.hpp>

#include <qbarnes/errors.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nt_util.hpp"

namespace qbarnes {

namespace {

constexpr long kExactOrder = 1L << 40; // knowledge-order sentinel for exact zero

mpz_class pow_p(unsigned long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
    return r;
}

long remove_p(mpz_class& n, unsigned long p) {
    const mpz_class pz(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace

PadicApprox PadicApprox::exact_zero(unsigned long p) {
    return PadicApprox(p, kExactOrder, true, kExactOrder, 0);
}

PadicApprox PadicApprox::zero_at(unsigned long p, long known_order) {
    if (known_order <= 0)
        throw PrecisionExhaustedError("PadicApprox: knowledge order dropped to " +
                                      std::to_string(known_order));
    return PadicApprox(p, std::min(known_order, kExactOrder), true,
                       std::min(known_order, kExactOrder), 0);
}

PadicApprox PadicApprox::from_integer(const mpz_class& n, unsigned long p, int unit_prec) {
    if (n == 0) return exact_zero(p);
    mpz_class u = n;
    const long v = remove_p(u, p);
    u %= pow_p(p, unit_prec);
    if (u < 0) u += pow_p(p, unit_prec);
    return PadicApprox(p, v + unit_prec, false, v, std::move(u));
}

PadicApprox PadicApprox::from_rational(const BigRat& x, unsigned long p, int unit_prec) {
    if (x.is_zero()) return exact_zero(p);
    mpz_class nu = x.numerator(), de = x.denominator();
    const long v = remove_p(nu, p) - remove_p(de, p);
    const mpz_class m = pow_p(p, unit_prec);
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), de.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("PadicApprox: denominator not invertible");
    mpz_class u = (nu % m) * di % m;
    if (u < 0) u += m;
    return PadicApprox(p, v + unit_prec, false, v, std::move(u));
}

PadicApprox PadicApprox::from_residue(const mpz_class& residue, unsigned long p, long known_order,
                                      int max_unit_prec) {
    mpz_class x = residue % pow_p(p, known_order);
    if (x < 0) x += pow_p(p, known_order);
    PadicApprox r = renormalize(p, std::move(x), known_order);
    if (!r.zero_ && r.precision() > max_unit_prec) {
        r.known_ = r.val_ + max_unit_prec;
        r.unit_ %= pow_p(p, max_unit_prec);
    }
    return r;
}

PadicApprox PadicApprox::renormalize(unsigned long p, mpz_class residue, long known_order) {
    if (known_order <= 0)
        throw PrecisionExhaustedError("PadicApprox: knowledge order dropped to " +
                                      std::to_string(known_order));
    if (residue == 0) return zero_at(p, known_order);
    const long v = remove_p(residue, p);
    return PadicApprox(p, known_order, false, v, std::move(residue));
}

long PadicApprox::valuation() const {
    if (zero_) throw Error("PadicApprox: valuation of (approximate) zero");
    return val_;
}

int PadicApprox::precision() const {
    return zero_ ? 0 : static_cast<int>(known_ - val_);
}

const mpz_class& PadicApprox::unit() const {
    if (zero_) throw Error("PadicApprox: unit of (approximate) zero");
    return unit_;
}

// Residue of p^{-shift} * value modulo p^{k - shift}; shift <= val_ keeps the
// scaled value a p-adic integer even when the valuation is negative.
mpz_class PadicApprox::scaled_residue(long k, long shift) const {
    if (zero_ || val_ >= k) return 0;
    mpz_class r = unit_ % pow_p(p_, k - val_);
    return r * pow_p(p_, val_ - shift);
}

PadicApprox PadicApprox::operator-() const {
    if (zero_) return *this;
    const mpz_class m = pow_p(p_, known_ - val_);
    return PadicApprox(p_, known_, false, val_, m - unit_);
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (p_ != o.p_) throw Error("PadicApprox: mixed primes");
    // Zero operands are balls p^K Z_p; handle them without materializing
    // residues (their knowledge order may be the exact-zero sentinel).
    if (zero_ && o.zero_) return zero_at(p_, std::min(known_, o.known_));
    if (zero_) return o.truncate_to(known_);
    if (o.zero_) return truncate_to(o.known_);
    const long k = std::min(known_, o.known_);
    const long shift = std::min(val_, o.val_);
    mpz_class sum = (scaled_residue(k, shift) + o.scaled_residue(k, shift)) % pow_p(p_, k - shift);
    PadicApprox r = renormalize(p_, std::move(sum), k - shift);
    r.val_ += shift;
    r.known_ += shift;
    return r;
}

PadicApprox PadicApprox::truncate_to(long k) const {
    if (k >= known_) return *this;
    if (zero_ || val_ >= k) return zero_at(p_, k);
    mpz_class u = unit_ % pow_p(p_, k - val_);
    return PadicApprox(p_, k, false, val_, std::move(u));
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const {
    return *this + (-o);
}

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (p_ != o.p_) throw Error("PadicApprox: mixed primes");
    if (zero_ || o.zero_) {
        const long ka = zero_ ? known_ : val_;
        const long kb = o.zero_ ? o.known_ : o.val_;
        return zero_at(p_, std::min(ka + kb, kExactOrder));
    }
    const int m = std::min(precision(), o.precision());
    mpz_class u = unit_ * o.unit_ % pow_p(p_, m);
    return PadicApprox(p_, val_ + o.val_ + m, false, val_ + o.val_, std::move(u));
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const {
    if (p_ != o.p_) throw Error("PadicApprox: mixed primes");
    if (o.zero_) throw DivisionByZeroError("PadicApprox: division by (approximate) zero");
    if (zero_) return zero_at(p_, known_ - o.val_);
    const int m = std::min(precision(), o.precision());
    const mpz_class mod = pow_p(p_, m);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), o.unit_.get_mpz_t(), mod.get_mpz_t());
    mpz_class u = unit_ * inv % mod;
    const long v = val_ - o.val_;
    return PadicApprox(p_, v + m, false, v, std::move(u));
}

PadicApprox PadicApprox::pow(long e) const {
    if (e == 0) {
        PadicApprox one = from_integer(1, p_, zero_ ? 16 : precision());
        return one;
    }
    PadicApprox base = *this;
    if (e < 0) {
        if (zero_) throw DivisionByZeroError("PadicApprox: negative power of (approximate) zero");
        base = from_integer(1, p_, precision()) / base;
        e = -e;
    }
    PadicApprox acc = from_integer(1, p_, base.zero_ ? 16 : base.precision());
    auto k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1UL;
    }
    return acc;
}

std::string PadicApprox::to_string() const {
    const std::string tail = " + O(" + std::to_string(p_) + "^" + std::to_string(known_) + ")";
    if (zero_) return "O(" + std::to_string(p_) + "^" + std::to_string(known_) + ")";
    if (val_ == 0) return unit_.get_str() + tail;
    return std::to_string(p_) + "^" + std::to_string(val_) + " * " + unit_.get_str() + tail;
}

PadicApprox teichmuller(unsigned long p, int prec, const mpz_class& a) {
    if (mpz_class(gcd(mpz_class(a), mpz_class(static_cast<unsigned long>(p)))) != 1)
        throw std::invalid_argument("teichmuller: a must be coprime to p");
    const mpz_class m = pow_p(p, prec);
    mpz_class x = a % m;
    if (x < 0) x += m;
    for (int i = 0; i <= prec + 2; ++i) {
        mpz_class y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
        if (y == x) return PadicApprox::from_integer(x, p, prec);
        x = y;
    }
    throw Error("teichmuller: iteration failed to stabilize");
}

namespace {

long ceil_log(unsigned long base, unsigned long x) {
    long k = 0;
    unsigned long acc = 1;
    while (acc < x) {
        acc *= base;
        ++k;
    }
    return k;
}

// q0^e mod p^prec as a p-adic unit; negative exponents via modular inverse.
PadicApprox q0_power(const mpz_class& q0, long e, unsigned long p, int prec) {
    const mpz_class m = pow_p(p, prec);
    mpz_class expo(std::abs(e));
    mpz_class r;
    mpz_powm(r.get_mpz_t(), q0.get_mpz_t(), expo.get_mpz_t(), m.get_mpz_t());
    if (e < 0) mpz_invert(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return PadicApprox::from_integer(r, p, prec); // q0 is a unit, so r != 0
}

long vp_long(long x, unsigned long p) {
    long v = 0;
    while (x != 0 && x % static_cast<long>(p) == 0) {
        x /= static_cast<long>(p);
        ++v;
    }
    return v;
}

// [y : q0] = (1 - q0^y)/(1 - q0) as a PadicApprox with unit precision W.
// v_p(1 - q0^y) = v_p(y) + v_p(q0 - 1) for q0 == 1 mod p (p odd), so a
// per-term headroom of that size keeps the extracted valuation exact.
PadicApprox q_int_padic(long y, const mpz_class& q0, unsigned long p, int W, long v1) {
    if (y == 0) return PadicApprox::exact_zero(p);
    const long head = vp_long(y, p) + v1 + 2;
    const long korder = W + head;
    const mpz_class m = pow_p(p, korder);
    mpz_class expo(std::abs(y));
    mpz_class qy;
    mpz_powm(qy.get_mpz_t(), q0.get_mpz_t(), expo.get_mpz_t(), m.get_mpz_t());
    if (y < 0) mpz_invert(qy.get_mpz_t(), qy.get_mpz_t(), m.get_mpz_t());
    const PadicApprox num = PadicApprox::from_residue(1 - qy, p, korder, W);
    const PadicApprox den = PadicApprox::from_integer(1 - q0, p, W);
    return num / den;
}

} // namespace

void OracleJob::validate() const {
    if (p < 3 || !detail::is_prime(p))
        throw std::invalid_argument("OracleJob: p must be an odd prime");
    if (q0 == 1 || (q0 - 1) % static_cast<long>(p) != 0)
        throw std::invalid_argument("OracleJob: q0 must be == 1 mod p and != 1");
    if (d < 1) throw std::invalid_argument("OracleJob: d must be >= 1");
    if (N < 1) throw std::invalid_argument("OracleJob: level N must be >= 1");
    if (params.s != 1) throw std::invalid_argument("OracleJob: params.s must be 1");
    if (!params.w.is_integer())
        throw std::invalid_argument("OracleJob: the oracle is restricted to integer shifts w");
    if (chi) {
        if (d % chi->modulus() != 0)
            throw std::invalid_argument("OracleJob: chi modulus must divide d");
        if ((p - 1) % chi->order() != 0)
            throw std::invalid_argument("OracleJob: chi order must divide p - 1");
        if (detail::gcd_ul(d, p) != 1)
            throw std::invalid_argument("OracleJob: gcd(d, p) must be 1 with a character");
    }
}

int oracle_working_precision(const OracleJob& job) {
    const auto r = static_cast<long>(job.params.alphas.size());
    const long base = std::max<long>(10, 2L * job.N + 6);
    return static_cast<int>(base + r * (job.N + ceil_log(job.p, job.d) + 2));
}

PadicApprox riemann_sum(const OracleJob& job) {
    job.validate();
    job.params.validate();
    const unsigned long p = job.p;
    const int W = oracle_working_precision(job);
    const std::size_t r = job.params.alphas.size();
    const long w = job.params.w.to_long();
    const int h = job.params.h;

    unsigned long span = job.d;
    for (unsigned i = 0; i < job.N; ++i) span *= p; // d p^N

    // [d p^N : q0] exactly, then its r-th-power inverse.
    mpz_class qspan;
    mpz_pow_ui(qspan.get_mpz_t(), job.q0.get_mpz_t(), span);
    const mpz_class big_bracket = (qspan - 1) / (job.q0 - 1);
    const PadicApprox inv_meas =
        (PadicApprox::from_integer(1, p, W) / PadicApprox::from_integer(big_bracket, p, W)).pow(
            static_cast<long>(r));

    // Character values embedded via the Teichmuller lift of a primitive root.
    std::vector<std::optional<PadicApprox>> chi_tab;
    if (job.chi) {
        const unsigned long e = job.chi->order();
        const PadicApprox omega =
            teichmuller(p, W, mpz_class(detail::primitive_root_mod_p(p)))
                .pow(static_cast<long>((p - 1) / e));
        std::vector<PadicApprox> zeta_pows;
        PadicApprox acc = PadicApprox::from_integer(1, p, W);
        for (unsigned long k = 0; k < e; ++k) {
            zeta_pows.push_back(acc);
            acc = acc * omega;
        }
        chi_tab.resize(job.chi->modulus());
        for (unsigned long c = 0; c < job.chi->modulus(); ++c) {
            const auto ke = job.chi->exponent(c);
            if (ke) chi_tab[c] = zeta_pows[*ke];
        }
    }

    mpz_class v1z = job.q0 - 1;
    const long v1 = static_cast<long>(mpz_remove(v1z.get_mpz_t(), v1z.get_mpz_t(),
                                                 mpz_class(p).get_mpz_t()));

    PadicApprox acc = PadicApprox::exact_zero(p);
    std::vector<unsigned long> a(r, 0);
    while (true) {
        bool skip = false;
        std::optional<PadicApprox> chi_factor;
        long y = w;
        long e_weight = 0; // q^{(h-l) a_l} from the integrand plus q^{a_l} from mu_q
        for (std::size_t l = 1; l <= r; ++l) {
            const auto al = static_cast<long>(a[l - 1]);
            y += job.params.alphas[l - 1] * al;
            e_weight += (h - static_cast<long>(l) + 1) * al;
            if (job.chi) {
                const auto& cv = chi_tab[a[l - 1] % job.chi->modulus()];
                if (!cv) {
                    skip = true;
                    break;
                }
                chi_factor = chi_factor ? (*chi_factor) * (*cv) : *cv;
            }
        }
        if (!skip) {
            PadicApprox term = job.params.n == 0
                                   ? PadicApprox::from_integer(1, p, W)
                                   : q_int_padic(y, job.q0, p, W, v1)
                                         .pow(static_cast<long>(job.params.n));
            if (e_weight != 0) term = term * q0_power(job.q0, e_weight, p, W);
            if (chi_factor) term = term * *chi_factor;
            acc = acc + term * inv_meas;
        }
        std::size_t pos = 0;
        while (pos < r && ++a[pos] == span) a[pos++] = 0;
        if (pos == r) break;
    }
    if (acc.known_order() < static_cast<long>(job.N) + 2)
        throw PrecisionExhaustedError("riemann_sum: cancellation ate the precision buffer (K=" +
                                      std::to_string(acc.known_order()) + ")");
    return acc;
}

std::vector<OracleJob> job_ladder(const OracleJob& base, unsigned n_max) {
    std::vector<OracleJob> jobs;
    for (unsigned N = 1; N <= n_max; ++N) {
        OracleJob j = base;
        j.N = N;
        jobs.push_back(std::move(j));
    }
    return jobs;
}

namespace {

OracleReport compare_rows(const std::vector<OracleJob>& jobs,
                          const std::function<PadicApprox(const OracleJob&)>& closed_at) {
    OracleReport rep;
    rep.pass = !jobs.empty();
    bool prev_exact = false;
    long prev_val = 0;
    bool first = true;
    unsigned max_n = 0;
    for (const auto& job : jobs) {
        max_n = std::max(max_n, job.N);
        const PadicApprox s = riemann_sum(job);
        const PadicApprox residual = s - closed_at(job);
        OracleRow row;
        row.N = job.N;
        row.working_precision = oracle_working_precision(job);
        row.exact_zero = residual.is_zero();
        row.residual_valuation = row.exact_zero ? residual.known_order() : residual.valuation();
        if (first) {
            row.pass = true;
        } else if (row.exact_zero) {
            row.pass = true; // +infinity beats anything before it
        } else {
            row.pass = !prev_exact && row.residual_valuation > prev_val;
        }
        first = false;
        prev_exact = row.exact_zero;
        prev_val = row.residual_valuation;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    if (!rep.rows.empty()) {
        const auto& last = rep.rows.back();
        const bool final_ok = last.residual_valuation >= static_cast<long>(max_n);
        rep.pass = rep.pass && final_ok;
    }
    return rep;
}

} // namespace

OracleReport oracle_compare(const RatFun& closed, const std::vector<OracleJob>& jobs) {
    return compare_rows(jobs, [&](const OracleJob& job) {
        const BigRat v = closed.eval(BigRat(job.q0));
        return PadicApprox::from_rational(v, job.p, oracle_working_precision(job));
    });
}

std::string oracle_rows_json(const OracleReport& report) {
    std::string out = "[";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        if (i) out += ", ";
        out += "{\"N\": " + std::to_string(r.N) +
               ", \"residual_valuation\": " + std::to_string(r.residual_valuation) +
               ", \"working_precision\": " + std::to_string(r.working_precision) +
               ", \"pass\": " + (r.pass ? "true" : "false") +
               ", \"exact_zero\": " + (r.exact_zero ? "true" : "false") + "}";
    }
    return out + "]";
}

OracleReport oracle_compare(const CycloElem& closed, const std::vector<OracleJob>& jobs) {
    return compare_rows(jobs, [&](const OracleJob& job) {
        const int W = oracle_working_precision(job);
        const unsigned long e = closed.order();
        if ((job.p - 1) % e != 0)
            throw std::invalid_argument("oracle_compare: extension order must divide p - 1");
        const PadicApprox omega =
            teichmuller(job.p, W, mpz_class(detail::primitive_root_mod_p(job.p)))
                .pow(static_cast<long>((job.p - 1) / e));
        PadicApprox acc = PadicApprox::exact_zero(job.p);
        PadicApprox zp = PadicApprox::from_integer(1, job.p, W);
        for (const auto& c : closed.coeffs()) {
            if (!c.is_zero())
                acc = acc + PadicApprox::from_rational(c.eval(BigRat(job.q0)), job.p, W) * zp;
            zp = zp * omega;
        }
        return acc;
    });
}

} // namespace qbarnes
