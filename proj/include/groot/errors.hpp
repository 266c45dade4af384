#pragma once

#include <stdexcept>
#include <string>

namespace groot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic left the representable range; silent wraparound is never allowed.
struct OverflowError : Error {
    using Error::Error;
};

// Malformed user input: triples, sum expressions, config files.
struct ParseError : Error {
    using Error::Error;
};

// Exponents not pairwise coprime, below 2, or otherwise not a Brieskorn sphere.
struct InvalidTriple : Error {
    using Error::Error;
};

// Leading principal minors of the plumbing form fail to alternate in sign.
struct NegativeDefinitenessFailure : Error {
    using Error::Error;
};

// (K^2 + s)/4 is not an even integer.
struct NonIntegralShift : Error {
    using Error::Error;
};

// Some delta(n) <= 0 at or beyond the truncation horizon.
struct NotStabilized : Error {
    using Error::Error;
};

// Leaf/angle gradings are not palindromic.
struct AsymmetricRoot : Error {
    using Error::Error;
};

// Monotone parameter list violates its monotonicity constraints.
struct InvalidParams : Error {
    using Error::Error;
};

// A leaf/angle grading difference is odd; U-exponents must be integers.
struct OddExponent : Error {
    using Error::Error;
};

// Atom gradings must be even.
struct OddGrading : Error {
    using Error::Error;
};

// r_0 of a reversed sphere is only known when the R-invariant is positive.
struct FormulaInapplicable : Error {
    using Error::Error;
};

// A scan found a witness against one of the arithmetic claims. Must never fire.
struct CounterexampleFound : Error {
    using Error::Error;
};

}  // namespace groot
