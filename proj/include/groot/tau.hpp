#pragma once

#include <vector>

#include "groot/seifert.hpp"

namespace groot {

// delta(n) = 1 - n*e0 - sum_i ceil(n*w_i/a_i); tau is its prefix sum,
// tau(n) = sum_{j<n} delta(j).
Int delta_value(const SeifertData& d, Int n);

// Values of tau at its strict local extrema (plateaus collapsed), in order.
// Alternates minimum, maximum, ..., minimum; minima.size() == maxima.size()+1.
struct TauExtrema {
    std::vector<Int> minima;
    std::vector<Int> maxima;
    Int min_tau = 0;
};

struct TauProfile {
    SeifertData data;
    Int horizon = 0;  // N = 2 a1 a2 a3; delta(n) > 0 for n >= N

    static TauProfile of(const BrieskornTriple& t);

    Int delta(Int n) const { return delta_value(data, n); }
    Int tau(Int n) const;

    // Streaming scan of tau over [0, horizon]. Throws NotStabilized if the
    // sequence is still descending at the horizon or some delta(n) <= 0 is
    // found in a sampled window beyond it.
    TauExtrema extrema() const;
};

}  // namespace groot
