#pragma once

#include <Eigen/Dense>
#include <random>

#include "groot/eigen_rational.hpp"
#include "groot/plumbing.hpp"

namespace groot::testing {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Fraction-free Bareiss elimination; returns the leading principal minors of
// A. Requires all of them nonzero (true for definite forms).
inline std::vector<Int> bareiss_minors(IntMatrix A) {
    const Int n = A.rows();
    std::vector<Int> minors;
    Int prev = 1;
    for (Int k = 0; k < n; ++k) {
        const Int pivot = A(k, k);
        if (pivot == 0) throw Error("bareiss_minors: zero pivot");
        for (Int i = k + 1; i < n; ++i)
            for (Int j = k + 1; j < n; ++j) {
                const Int128 num = Int128(A(i, j)) * pivot - Int128(A(i, k)) * A(k, j);
                if (num % prev != 0) throw Error("bareiss_minors: inexact division");
                A(i, j) = to_int64(num / prev);
            }
        minors.push_back(pivot);
        prev = pivot;
    }
    return minors;
}

// Exact dense route for K^2: solve Q k = b with FullPivLU over Rational.
inline Rational dense_k_squared(const PlumbingGraph& g) {
    IntMatrix Q = intersection_matrix(g);
    const Int s = Q.rows();
    RationalMatrix Qr(s, s);
    for (Int i = 0; i < s; ++i)
        for (Int j = 0; j < s; ++j) Qr(i, j) = Rational(Q(i, j));
    RationalVector b(s);
    for (Int i = 0; i < s; ++i) b(i) = Rational(-Q(i, i) - 2);
    Eigen::FullPivLU<RationalMatrix> lu(Qr);
    RationalVector k = lu.solve(b);
    Rational k2;
    for (Int i = 0; i < s; ++i) k2 += b(i) * k(i);
    return k2;
}

inline Rational dense_determinant(const PlumbingGraph& g) {
    IntMatrix Q = intersection_matrix(g);
    const Int s = Q.rows();
    RationalMatrix Qr(s, s);
    for (Int i = 0; i < s; ++i)
        for (Int j = 0; j < s; ++j) Qr(i, j) = Rational(Q(i, j));
    return Eigen::FullPivLU<RationalMatrix>(Qr).determinant();
}

}  // namespace groot::testing
