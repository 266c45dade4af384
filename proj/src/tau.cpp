#include "groot/tau.hpp"

namespace groot {

Int delta_value(const SeifertData& d, Int n) {
    Int v = checked_sub(1, checked_mul(n, d.e0));
    for (const auto& [alpha, omega] : d.legs)
        v = checked_sub(v, ceil_div(checked_mul(n, omega), alpha));
    return v;
}

TauProfile TauProfile::of(const BrieskornTriple& t) {
    TauProfile p;
    p.data = normalize_seifert(t);
    p.horizon = checked_mul(2, t.product());
    return p;
}

Int TauProfile::tau(Int n) const {
    Int s = 0;
    for (Int j = 0; j < n; ++j) s = checked_add(s, delta(j));
    return s;
}

TauExtrema TauProfile::extrema() const {
    TauExtrema ex;
    Int cur = 0;  // tau(0)
    int dir = 0;
    for (Int n = 0; n < horizon; ++n) {
        const Int next = checked_add(cur, delta(n));
        if (next == cur) continue;
        const int d = next > cur ? 1 : -1;
        if (dir == 0) {
            if (d < 0) throw Error("tau descends from tau(0); invalid Seifert data");
            ex.minima.push_back(cur);
        } else if (d != dir) {
            (dir > 0 ? ex.maxima : ex.minima).push_back(cur);
        }
        dir = d;
        cur = next;
    }
    // delta is positive from the horizon on, so a pending descent bottoms out
    // exactly at tau(horizon).
    for (Int j = 0; j < 64; ++j)
        if (delta(checked_add(horizon, j)) <= 0)
            throw NotStabilized("delta(" + std::to_string(horizon + j) + ") <= 0 beyond the horizon");
    if (dir < 0) ex.minima.push_back(cur);
    if (ex.minima.empty()) ex.minima.push_back(cur);  // constant tau (degenerate)
    ex.min_tau = ex.minima.front();
    for (Int m : ex.minima) ex.min_tau = std::min(ex.min_tau, m);
    return ex;
}

}  // namespace groot
