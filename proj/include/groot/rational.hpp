#pragma once

#include <compare>
#include <string>

#include "groot/checked.hpp"

namespace groot {

// Exact rational with 64-bit reduced numerator/denominator. Intermediate
// arithmetic runs in 128 bits; results that do not fit 64 bits throw
// OverflowError rather than wrap.
class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n) {}  // NOLINT: implicit by design
    Rational(Int n, Int d) { assign(Int128(n), Int128(d)); }

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_, Int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(Int128(a.num_) * b.den_ - Int128(b.num_) * a.den_, Int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(Int128(a.num_) * b.num_, Int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from128(Int128(a.num_) * b.den_, Int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int128 lhs = Int128(a.num_) * b.den_;
        Int128 rhs = Int128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static Rational from128(Int128 n, Int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    void assign(Int128 n, Int128 d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = to_int64(n);
        den_ = to_int64(d);
    }

    Int num_ = 0;
    Int den_ = 1;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace groot
