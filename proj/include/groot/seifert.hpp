#pragma once

#include <string>
#include <vector>

#include "groot/rational.hpp"

namespace groot {

enum class Orientation { Positive, Negative };

// Exponents of a Brieskorn sphere sigma(a1,a2,a3): pairwise coprime, each >= 2,
// stored in increasing order. The sign distinguishes sigma from -sigma.
struct BrieskornTriple {
    Int a1 = 2, a2 = 3, a3 = 5;
    Orientation orientation = Orientation::Positive;

    BrieskornTriple() = default;
    BrieskornTriple(Int x, Int y, Int z, Orientation o = Orientation::Positive);

    Int product() const { return checked_mul(a1, checked_mul(a2, a3)); }
    bool positive() const { return orientation == Orientation::Positive; }
    BrieskornTriple reversed() const;
    // "2,3,5" or "-2,3,5".
    std::string str() const;

    friend bool operator==(const BrieskornTriple&, const BrieskornTriple&) = default;
    friend auto operator<=>(const BrieskornTriple&, const BrieskornTriple&) = default;
};

// Normalized Seifert invariants (e0; (a_i, w_i)) with 0 < w_i < a_i and
// e0 + sum w_i/a_i = -1/(a1 a2 a3).
struct SeifertData {
    Int e0 = 0;
    std::vector<std::pair<Int, Int>> legs;  // (alpha_i, omega_i)
    Rational euler;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

SeifertData normalize_seifert(const BrieskornTriple& t);

// Hirzebruch-Jung expansion a/w = c1 - 1/(c2 - 1/(...)), c_j >= 2, emitted as
// plumbing weights -c_j from the central vertex outward.
std::vector<Int> neg_continued_fraction(Int alpha, Int omega);

// Back-substitute a weight chain to the rational c1 - 1/(c2 - ...) it encodes.
Rational continued_fraction_value(const std::vector<Int>& weights);

}  // namespace groot
