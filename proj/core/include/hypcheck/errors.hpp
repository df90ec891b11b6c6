#pragma once

#include <stdexcept>
#include <string>

namespace hypcheck {

// Root of the library's exception hierarchy. Everything thrown on purpose
// derives from this; anything else escaping the library is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction of a rational or rational function with a zero denominator.
class ZeroDenominatorError : public Error {
public:
    ZeroDenominatorError() : Error("zero denominator") {}
    using Error::Error;
};

// A rational-function numerator or denominator exceeded the degree bound,
// which normally means a runaway symbolic composition.
class DegreeBoundError : public Error {
public:
    explicit DegreeBoundError(int degree)
        : Error("rational function degree " + std::to_string(degree) +
                " exceeds bound") {}
};

// Malformed textual input (scalars, series expressions, id lists).
class ParseError : public Error {
public:
    using Error::Error;
};

// A series without a nonpositive-integer numerator parameter was passed to an
// operation that needs a terminating series.
class NonTerminatingError : public Error {
public:
    NonTerminatingError() : Error("series does not terminate") {}
};

// A denominator Pochhammer factor vanished at term k before any numerator
// factor did, so the requested sum is undefined.
class PoleAtTermError : public Error {
public:
    explicit PoleAtTermError(long k)
        : Error("denominator Pochhammer factor vanishes at term " +
                std::to_string(k)),
          term_(k) {}
    long term() const { return term_; }

private:
    long term_;
};

// A Pochhammer symbol that an operation must divide by is zero.
class ZeroPochhammerError : public Error {
public:
    using Error::Error;
    ZeroPochhammerError() : Error("Pochhammer factor is zero") {}
};

// Summation reversal of a series with argument zero.
class ZeroArgumentError : public Error {
public:
    ZeroArgumentError() : Error("cannot reverse a series with argument 0") {}
};

// Affine maps of mismatched arity were combined.
class ArityMismatchError : public Error {
public:
    using Error::Error;
    ArityMismatchError() : Error("affine map arity mismatch") {}
};

// Group closure did not stabilize within the element cap.
class ClosureCapError : public Error {
public:
    explicit ClosureCapError(int cap)
        : Error("group closure exceeded " + std::to_string(cap) + " elements") {}
};

// A generated group is not one of the orders the classifier understands.
class UnsupportedOrderError : public Error {
public:
    explicit UnsupportedOrderError(int order)
        : Error("cannot classify group of order " + std::to_string(order)) {}
};

// Lookup of a catalog id that does not exist.
class UnknownIdError : public Error {
public:
    explicit UnknownIdError(const std::string& id)
        : Error("unknown identity id: " + id) {}
};

// Parameter sampling failed to find a guard-satisfying draw within the retry cap.
class GuardExhaustionError : public Error {
public:
    explicit GuardExhaustionError(const std::string& id)
        : Error("sampling retry cap exhausted for " + id) {}
};

// A limit-lab precondition failed (for example the t-free guards of the
// identity being perturbed do not hold).
class GuardFailureError : public Error {
public:
    using Error::Error;
};

} // namespace hypcheck
