#pragma once

#include <stdexcept>
#include <string>

namespace qbarnes {

/// Base class for all qbarnes computation errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ZeroDenominatorError : public Error {
public:
    explicit ZeroDenominatorError(const std::string& msg = "zero denominator") : Error(msg) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& msg = "division by zero") : Error(msg) {}
};

/// Evaluation of a rational function at a root of its (reduced) denominator.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

/// Mixed truncation orders (power series) or extension orders (cyclotomic).
class OrderMismatchError : public Error {
public:
    explicit OrderMismatchError(const std::string& msg) : Error(msg) {}
};

/// Power series inversion with vanishing constant term.
class NonUnitError : public Error {
public:
    explicit NonUnitError(const std::string& msg = "constant term is zero, series is not invertible")
        : Error(msg) {}
};

/// A q-power whose exponent is not an integer (s*x or s*w not integral).
class NonIntegerExponentError : public Error {
public:
    explicit NonIntegerExponentError(const std::string& msg) : Error(msg) {}
};

/// A factor j*alpha_l + h - l + 1 = 0 in the closed form: the value is not a
/// rational function there. Carries the offending indices (l is 1-based).
class SingularFactorError : public Error {
public:
    SingularFactorError(unsigned j, unsigned l)
        : Error("singular factor at j=" + std::to_string(j) + ", l=" + std::to_string(l) +
                ": j*alpha_l + h - l + 1 = 0"),
          j_(j), l_(l) {}
    unsigned j() const { return j_; }
    unsigned l() const { return l_; }

private:
    unsigned j_;
    unsigned l_;
};

/// Downcast of a cyclotomic element with nonzero zeta-coefficients.
class NotRationalError : public Error {
public:
    explicit NotRationalError(const std::string& msg) : Error(msg) {}
};

/// Dirichlet character table violating one of the defining invariants.
class CharacterError : public Error {
public:
    explicit CharacterError(const std::string& msg) : Error(msg) {}
};

/// p-adic working precision eaten by cancellation.
class PrecisionExhaustedError : public Error {
public:
    explicit PrecisionExhaustedError(const std::string& msg) : Error(msg) {}
};

} // namespace qbarnes
