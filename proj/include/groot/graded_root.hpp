#pragma once

#include <vector>

#include "groot/plumbing.hpp"
#include "groot/tau.hpp"

namespace groot {

// Symmetric graded root in canonical zigzag form: leaf gradings L[1..k] and
// intervening angle gradings A[1..k-1], all even, with L[i] > A[i] < L[i+1].
// The involution J is index reversal, so the root is symmetric exactly when
// both sequences are palindromes.
class GradedRoot {
public:
    GradedRoot(Int sigma, std::vector<Int> leaves, std::vector<Int> angles);

    Int sigma() const { return sigma_; }
    const std::vector<Int>& leaves() const { return leaves_; }
    const std::vector<Int>& angles() const { return angles_; }
    bool symmetric() const;

    // The grading set G_R: the root has a vertex at every even grading up to
    // its top leaf (branches fill the range, the stem continues down forever).
    bool grading_set_contains(Int g) const;

    friend bool operator==(const GradedRoot&, const GradedRoot&) = default;

private:
    Int sigma_;
    std::vector<Int> leaves_;
    std::vector<Int> angles_;
};

// Full pipeline: normalize, plumb, compute sigma, scan tau, convert extrema
// to gradings via L = sigma - 2 min, A = sigma - 2 max. Positive orientation
// only. Throws AsymmetricRoot if the result is not palindromic.
GradedRoot graded_root_of(const BrieskornTriple& t);

GradedRoot root_from_extrema(Int sigma, const TauExtrema& ex);

// d = max leaf grading = sigma - 2 min tau.
Int d_invariant(const GradedRoot& r);

}  // namespace groot
