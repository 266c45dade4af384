#include "groot/seifert.hpp"

#include <algorithm>
#include <numeric>

namespace groot {

BrieskornTriple::BrieskornTriple(Int x, Int y, Int z, Orientation o) : orientation(o) {
    Int v[3] = {x, y, z};
    std::sort(v, v + 3);
    a1 = v[0];
    a2 = v[1];
    a3 = v[2];
    if (a1 < 2) throw InvalidTriple("Brieskorn exponents must be >= 2: " + str());
    if (std::gcd(a1, a2) != 1 || std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1)
        throw InvalidTriple("Brieskorn exponents must be pairwise coprime: " + str());
}

BrieskornTriple BrieskornTriple::reversed() const {
    BrieskornTriple r = *this;
    r.orientation = positive() ? Orientation::Negative : Orientation::Positive;
    return r;
}

std::string BrieskornTriple::str() const {
    std::string s = positive() ? "" : "-";
    return s + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3);
}

SeifertData normalize_seifert(const BrieskornTriple& t) {
    // e0*P + sum_i w_i*(P/a_i) = -1 with P = a1 a2 a3 forces
    // w_i = -(P/a_i)^{-1} mod a_i, then e0 by exact division.
    const Int P = t.product();
    SeifertData d;
    Int partial = -1;
    for (Int a : {t.a1, t.a2, t.a3}) {
        const Int q = P / a;
        Int w = (a - mod_inverse(q % a, a)) % a;
        if (w == 0) throw Error("normalize_seifert: internal error, zero multiplicity");
        d.legs.emplace_back(a, w);
        partial = checked_sub(partial, checked_mul(w, q));
    }
    if (partial % P != 0) throw Error("normalize_seifert: internal error, non-integral e0");
    d.e0 = partial / P;
    if (d.e0 > -1) throw Error("normalize_seifert: internal error, e0 > -1");
    d.euler = Rational(-1, P);
    return d;
}

std::vector<Int> neg_continued_fraction(Int alpha, Int omega) {
    if (!(0 < omega && omega < alpha)) throw InvalidParams("neg_continued_fraction requires 0 < omega < alpha");
    std::vector<Int> weights;
    Int a = alpha, b = omega;
    while (b > 0) {
        Int c = ceil_div(a, b);
        weights.push_back(-c);
        Int next = checked_sub(checked_mul(c, b), a);
        a = b;
        b = next;
    }
    return weights;
}

Rational continued_fraction_value(const std::vector<Int>& weights) {
    if (weights.empty()) throw InvalidParams("empty weight chain");
    Rational v;
    bool first = true;
    for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
        Rational c(-*it);
        v = first ? c : c - Rational(1) / v;
        first = false;
    }
    return v;
}

}  // namespace groot
