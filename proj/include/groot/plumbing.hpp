#pragma once

#include <Eigen/Core>
#include <vector>

#include "groot/seifert.hpp"

namespace groot {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Star-shaped negative definite plumbing: one central vertex and three linear
// legs, weights listed from the center outward. Vertex order everywhere
// (minors, dense matrix, solve) is leg 1, leg 2, leg 3, then the center.
struct PlumbingGraph {
    Int center_weight = 0;
    std::vector<std::vector<Int>> legs;

    Int vertex_count() const {
        Int s = 1;
        for (const auto& leg : legs) s += static_cast<Int>(leg.size());
        return s;
    }
};

// Assembles the plumbing of normalized Seifert data and verifies negative
// definiteness exactly; throws NegativeDefinitenessFailure otherwise.
PlumbingGraph build_plumbing(const SeifertData& d);

// Leading principal minors of the intersection form, computed by continuant
// recurrences in O(s).
std::vector<Int> leading_principal_minors(const PlumbingGraph& g);

// Sylvester test: k-th minor must have sign (-1)^k.
void verify_negative_definite(const PlumbingGraph& g);

// K^2 = b.k where Q k = b and b_v = -weight(v) - 2, solved exactly over the
// rationals by leg-wise elimination. The result is an integer for homology
// sphere plumbings.
Rational k_squared(const PlumbingGraph& g);

// sigma = (K^2 + s)/4; throws NonIntegralShift unless this is an even integer.
Int grading_shift_sigma(const PlumbingGraph& g);

// R = -2e - 3 with e the central weight.
Int fintushel_stern_R(const PlumbingGraph& g);

// Dense intersection form; refuses to materialize graphs with more than
// `max_size` vertices (long legs are better served by the recurrences above).
IntMatrix intersection_matrix(const PlumbingGraph& g, Int max_size = 5000);

}  // namespace groot
