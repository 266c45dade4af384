#include "groot/rzero.hpp"

#include <algorithm>
#include <set>

#include "groot/families.hpp"

namespace groot {

ExtendedRational r_zero(const BrieskornTriple& t) {
    if (t.positive()) return ExtendedRational::infinity();
    PlumbingGraph g = build_plumbing(normalize_seifert(t.reversed()));
    const Int R = fintushel_stern_R(g);
    if (R <= 0)
        throw FormulaInapplicable("r_0(" + t.str() + ") unknown: R = " + std::to_string(R) + " <= 0");
    return ExtendedRational::finite(Rational(1, checked_mul(4, t.product())));
}

ExtendedRational connected_sum_bound(const std::vector<std::pair<ExtendedRational, Rational>>& terms) {
    if (terms.empty()) throw InvalidParams("connected_sum_bound needs at least one term");
    for (const auto& [r, s] : terms)
        if (s > Rational(0)) throw InvalidParams("connected sum parameters must satisfy s <= 0");
    ExtendedRational acc = terms[0].first;
    Rational acc_s = terms[0].second;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const auto& [r, s] = terms[i];
        acc = std::min(acc + s, r + acc_s);
        acc_s += s;
    }
    return acc;
}

IndependenceCertificate independence_certificate(const std::vector<BrieskornTriple>& family) {
    IndependenceCertificate cert;
    cert.checks.all_positive_side_infinite = true;
    cert.checks.all_finite = true;
    cert.checks.r_invariants_positive = true;

    for (const BrieskornTriple& raw : family) {
        BrieskornTriple t = raw.positive() ? raw : raw.reversed();
        cert.family.push_back(t);
        if (!r_zero(t).is_infinite()) cert.checks.all_positive_side_infinite = false;
        try {
            ExtendedRational r = r_zero(t.reversed());
            cert.r0_neg.push_back(*r.value);
        } catch (const FormulaInapplicable&) {
            cert.r0_neg.push_back(std::nullopt);
            cert.checks.all_finite = false;
            cert.checks.r_invariants_positive = false;
        }
    }

    std::set<Rational> seen;
    cert.checks.all_distinct = true;
    for (const auto& r : cert.r0_neg)
        if (r && !seen.insert(*r).second) cert.checks.all_distinct = false;

    cert.verdict = cert.checks.all_positive_side_infinite && cert.checks.all_finite &&
                   cert.checks.all_distinct && cert.checks.r_invariants_positive;
    return cert;
}

namespace {

Int product_B(Int n) {
    return n == 0 ? 30 : checked_mul(2 * n + 1, checked_mul(4 * n + 1, 4 * n + 3));
}
Int product_Y1(Int n) { return checked_mul(4 * n + 1, checked_mul(6 * n + 2, 12 * n + 1)); }
Int product_Y2(Int n) { return checked_mul(4 * n - 1, checked_mul(6 * n - 2, 12 * n - 1)); }
Int product_Y3(Int n) { return checked_mul(8 * n + 1, checked_mul(12 * n + 1, 24 * n + 5)); }
Int f_half(Int a) { return checked_mul(4 * a + 1, checked_mul(3 * a + 1, 12 * a + 1)); }
Int g_half(Int b) { return checked_mul(4 * b - 1, checked_mul(3 * b - 1, 12 * b - 1)); }

[[noreturn]] void witness(const std::string& what, Int n) {
    throw CounterexampleFound(what + " fails at n = " + std::to_string(n));
}

}  // namespace

FamilyScanReport family_scan(Int n_max) {
    if (n_max < 1) throw InvalidParams("family_scan requires n_max >= 1");
    FamilyScanReport rep;
    rep.n_max = n_max;

    for (Int n = 1; n <= n_max; ++n) {
        if (product_B(n) % 2 == 0) witness("parity: B product odd", n);
        if (product_Y1(n) % 2 != 0) witness("parity: Y1 product even", n);
        if (product_Y2(n) % 2 != 0) witness("parity: Y2 product even", n);
    }
    rep.parity = true;

    for (Int n = 1; n <= n_max; ++n)
        if (product_B(n) == 30 || product_Y1(n) == 30 || product_Y2(n) == 30)
            witness("product equals 30", n);
    rep.avoids_thirty = true;

    for (Int a = 1; a <= n_max; ++a) {
        if (!(g_half(a) < f_half(a) && f_half(a) < g_half(a + 1))) witness("interleaving g(a) < f(a) < g(a+1)", a);
        if (!(g_half(a) < g_half(a + 1))) witness("monotonicity of g", a);
    }
    rep.interleaving = true;

    for (Int n = 1; n <= n_max; ++n)
        if (product_B(4 * n) % 4 == product_Y3(n) % 4) witness("mod-4 distinctness of B(4n) and Y3(n)", n);
    rep.mod_four = true;

    return rep;
}

}  // namespace groot
