#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "groot/errors.hpp"

namespace groot {

using Int = std::int64_t;
using Int128 = __int128;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int to_int64(Int128 v) {
    if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN)) throw OverflowError("value exceeds 64-bit range");
    return static_cast<Int>(v);
}

inline Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

inline Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// b > 0 assumed for both.
inline Int ceil_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return r > 0 ? q + 1 : q;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return r < 0 ? q - 1 : q;
}

// Inverse of a modulo m (m >= 2, gcd(a, m) = 1), in [1, m).
inline Int mod_inverse(Int a, Int m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error("mod_inverse: arguments not coprime");
    return old_s < 0 ? old_s + m : old_s;
}

}  // namespace groot
