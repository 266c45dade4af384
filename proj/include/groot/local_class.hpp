#pragma once

#include <map>
#include <string>
#include <vector>

#include "groot/monotone.hpp"

namespace groot {

// Element of the free abelian group on {T} u {X_k}_{k>=1}, where T is the
// class of the single tower topped at 2 and X_k the class of M(2k,0).
// shift_rule_used records whether any atom M(h,r) with r not in {0, h} was
// normalized via X_{(h-r)/2} + (r/2) T; the identities required by the
// standard families never need it.
struct LocalClass {
    Int t = 0;
    std::map<Int, Int> x;  // k -> coefficient, nonzero entries only
    bool shift_rule_used = false;

    bool is_zero() const { return t == 0 && x.empty(); }
    // "X_2 - X_1 + 1*T" (X terms by decreasing index, T last), or "0".
    std::string str() const;

    LocalClass& operator+=(const LocalClass& o);
    LocalClass& operator-=(const LocalClass& o);
    friend LocalClass operator+(LocalClass a, const LocalClass& b) { return a += b; }
    friend LocalClass operator-(LocalClass a, const LocalClass& b) { return a -= b; }
    LocalClass operator-() const;
    friend LocalClass operator*(Int c, const LocalClass& a);

    // Equality of group elements; the bookkeeping flag does not participate.
    friend bool operator==(const LocalClass& a, const LocalClass& b) {
        return a.t == b.t && a.x == b.x;
    }
};

LocalClass class_T(Int coefficient = 1);
LocalClass class_X(Int k, Int coefficient = 1);

// M(h,r) -> (h/2) T when h = r; X_{h/2} when r = 0; otherwise
// X_{(h-r)/2} + (r/2) T with the shift flag raised.
LocalClass class_of_atom(Int h, Int r);

// M(h1,r1;...;hn,rn) = sum_i M(h_i,r_i) - sum_{i<n} M(h_{i+1},r_i).
LocalClass class_of_subroot(const MonotoneSubroot& m);

// Full pipeline root -> subroot -> class; orientation reversal negates.
LocalClass class_of_manifold(const BrieskornTriple& t);

// Evaluates sum multiplicity * class; true iff the result is zero.
std::pair<bool, LocalClass> is_kernel_element(const std::vector<std::pair<BrieskornTriple, Int>>& summands);

// Invariants forced to vanish for the zero class. The Seiberg-Witten list is
// included only when the kernel element came from an identity h(Y_a) = h(Y_b)
// of two single Seifert spheres.
std::vector<std::string> vanishing_report(const LocalClass& c, bool sw_equivalence_pair = false);

}  // namespace groot
