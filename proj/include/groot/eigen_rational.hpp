#pragma once

#include <Eigen/Core>

#include "groot/rational.hpp"

// Makes groot::Rational a first-class Eigen scalar, so decompositions such as
// FullPivLU run in exact arithmetic.
namespace Eigen {

template <>
struct NumTraits<groot::Rational> : GenericNumTraits<groot::Rational> {
    typedef groot::Rational Real;
    typedef groot::Rational NonInteger;
    typedef groot::Rational Nested;
    typedef groot::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 8
    };
    static inline Real epsilon() { return groot::Rational(0); }
    static inline Real dummy_precision() { return groot::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
