#pragma once

#include <string>
#include <utility>
#include <vector>

#include "groot/graded_root.hpp"

namespace groot {

// Parameter list (h1,r1;...;hn,rn) of a monotone graded subroot: h strictly
// decreasing, r strictly increasing, all even, h_i > r_i before the last pair
// and h_n >= r_n. Encodes a local equivalence class representative with
// dbar = h1 and dlower = r_n.
struct MonotoneSubroot {
    std::vector<std::pair<Int, Int>> params;

    explicit MonotoneSubroot(std::vector<std::pair<Int, Int>> p);

    Int pairs() const { return static_cast<Int>(params.size()); }
    // "M(h1,r1;...;hn,rn)", no spaces.
    std::string str() const;

    friend bool operator==(const MonotoneSubroot&, const MonotoneSubroot&) = default;
};

// Pareto-maximal merge pairs of a symmetric root: leaf i on the left half is
// paired with the lowest angle between it and its mirror image (the grading
// where the two branches meet); the middle leaf of an odd root pairs with
// itself. Dominated and duplicate pairs are dropped.
MonotoneSubroot extract_monotone(const GradedRoot& r);

// Zigzag realization: a symmetric pair of leaves at h_i merging at r_i for
// every strict pair, a single fixed leaf at r_n when h_n = r_n.
GradedRoot realize_subroot(const MonotoneSubroot& m);

// (dbar, dlower) = (h1, r_n).
std::pair<Int, Int> involutive_correction_terms(const MonotoneSubroot& m);

}  // namespace groot
