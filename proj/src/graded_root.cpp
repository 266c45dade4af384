#include "groot/graded_root.hpp"

#include <algorithm>

namespace groot {

GradedRoot::GradedRoot(Int sigma, std::vector<Int> leaves, std::vector<Int> angles)
    : sigma_(sigma), leaves_(std::move(leaves)), angles_(std::move(angles)) {
    if (leaves_.empty()) throw InvalidParams("graded root needs at least one leaf");
    if (angles_.size() + 1 != leaves_.size())
        throw InvalidParams("graded root needs exactly one angle between consecutive leaves");
    if (sigma_ % 2 != 0) throw InvalidParams("sigma must be even");
    for (Int g : leaves_)
        if (g % 2 != 0) throw InvalidParams("leaf gradings must be even");
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        if (angles_[i] % 2 != 0) throw InvalidParams("angle gradings must be even");
        if (!(angles_[i] < leaves_[i] && angles_[i] < leaves_[i + 1]))
            throw InvalidParams("zigzag violated: angle " + std::to_string(angles_[i]) +
                                " not below both neighboring leaves");
    }
}

bool GradedRoot::symmetric() const {
    auto palindrome = [](const std::vector<Int>& v) {
        return std::equal(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.rbegin());
    };
    return palindrome(leaves_) && palindrome(angles_);
}

bool GradedRoot::grading_set_contains(Int g) const {
    return g % 2 == 0 && g <= *std::max_element(leaves_.begin(), leaves_.end());
}

GradedRoot root_from_extrema(Int sigma, const TauExtrema& ex) {
    std::vector<Int> L, A;
    L.reserve(ex.minima.size());
    A.reserve(ex.maxima.size());
    for (Int m : ex.minima) L.push_back(checked_sub(sigma, checked_mul(2, m)));
    for (Int m : ex.maxima) A.push_back(checked_sub(sigma, checked_mul(2, m)));
    return GradedRoot(sigma, std::move(L), std::move(A));
}

GradedRoot graded_root_of(const BrieskornTriple& t) {
    if (!t.positive())
        throw InvalidTriple("graded roots are computed for the positive orientation; "
                            "orientation reversal acts at the class level");
    SeifertData d = normalize_seifert(t);
    PlumbingGraph g = build_plumbing(d);
    const Int sigma = grading_shift_sigma(g);
    TauProfile profile;
    profile.data = d;
    profile.horizon = checked_mul(2, t.product());
    GradedRoot root = root_from_extrema(sigma, profile.extrema());
    if (!root.symmetric()) throw AsymmetricRoot("graded root of " + t.str() + " is not palindromic");
    return root;
}

Int d_invariant(const GradedRoot& r) {
    return *std::max_element(r.leaves().begin(), r.leaves().end());
}

}  // namespace groot
