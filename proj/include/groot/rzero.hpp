#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groot/plumbing.hpp"

namespace groot {

// Exact rational extended by +infinity (infinity strictly largest).
struct ExtendedRational {
    std::optional<Rational> value;  // nullopt = +infinity

    static ExtendedRational infinity() { return {}; }
    static ExtendedRational finite(Rational r) { return {r}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string str() const { return value ? value->str() : "inf"; }

    friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (b.is_infinite()) return !a.is_infinite();
        if (a.is_infinite()) return false;
        return *a.value < *b.value;
    }
    friend ExtendedRational operator+(const ExtendedRational& a, const Rational& s) {
        if (a.is_infinite()) return a;
        return finite(*a.value + s);
    }
};

// r_0 from the two closed rules: positively oriented Seifert spheres bound
// negative definite fillings, so r_0 = infinity; for the reversed orientation
// r_0 = 1/(4 a1 a2 a3) provided R > 0, and is unknown otherwise
// (FormulaInapplicable).
ExtendedRational r_zero(const BrieskornTriple& t);

// Folds r_{s1+s2}(Y1 # Y2) >= min{r_{s1}(Y1) + s2, r_{s2}(Y2) + s1}
// left-associatively; each term is (r-value, s <= 0). Returns a lower bound
// for r at the summed parameter.
ExtendedRational connected_sum_bound(const std::vector<std::pair<ExtendedRational, Rational>>& terms);

struct CertificateChecks {
    bool all_positive_side_infinite = false;
    bool all_finite = false;
    bool all_distinct = false;
    bool r_invariants_positive = false;
};

// Machine-checkable hypotheses of the r_0 linear-independence criterion for
// the family with its reversed orientations: verdict true implies the family
// is linearly independent in the rational homology cobordism group.
struct IndependenceCertificate {
    std::vector<BrieskornTriple> family;
    std::vector<std::optional<Rational>> r0_neg;  // nullopt when inapplicable
    CertificateChecks checks;
    bool verdict = false;
};

IndependenceCertificate independence_certificate(const std::vector<BrieskornTriple>& family);

// Verifies the arithmetic facts behind the distinctness of r_0 across the
// standard families for all n, m <= n_max; throws CounterexampleFound with a
// witness if any fails.
struct FamilyScanReport {
    Int n_max = 0;
    bool parity = false;        // B products odd, Y1/Y2 products even
    bool avoids_thirty = false; // no product equals 30 = |sigma(2,3,5)|
    bool interleaving = false;  // g(a) < f(a) < g(a+1), g strictly increasing
    bool mod_four = false;      // B(4n) and Y3(n) products differ mod 4
    bool all_pass() const { return parity && avoids_thirty && interleaving && mod_four; }
};

FamilyScanReport family_scan(Int n_max);

}  // namespace groot
