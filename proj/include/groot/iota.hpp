#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groot/graded_root.hpp"

namespace groot {

enum class GenKind { Leaf, Angle };

struct Generator {
    std::string name;
    Int grading = 0;
    GenKind kind = GenKind::Leaf;
};

// U^power * gen with coefficient 1 over the 2-element field; U has grading -2.
struct UTerm {
    std::size_t gen = 0;
    Int power = 0;

    friend bool operator==(const UTerm&, const UTerm&) = default;
    friend auto operator<=>(const UTerm&, const UTerm&) = default;
};

// Free finitely generated graded complex over F[U] with a grading-preserving
// involution J. diff[i] lists the terms of the differential of generator i;
// terms are kept sorted and duplicate (gen, power) pairs cancel mod 2.
struct IotaComplex {
    std::vector<Generator> gens;
    std::vector<std::vector<UTerm>> diff;
    std::vector<std::size_t> J;
    // Zigzag provenance when built from a graded root; enables the linear-time
    // homology path.
    std::optional<GradedRoot> source_root;
};

// One leaf generator per L[i] at grading L[i], one angle generator per A[i] at
// grading A[i] + 1, with
//   d(alpha_i) = U^{(L[i]-A[i])/2} v_i + U^{(L[i+1]-A[i])/2} v_{i+1}
// and J reversing indices.
IotaComplex standard_complex_of(const GradedRoot& r);

// Graded tensor product: gradings add, d(x (x) y) = dx (x) y + x (x) dy,
// J = J1 (x) J2.
IotaComplex tensor_product(const IotaComplex& c1, const IotaComplex& c2);

// Throws unless d^2 = 0, Jd = dJ and J^2 = id.
void verify_complex_axioms(const IotaComplex& c);

struct TorsionSummand {
    Int top = 0;     // grading of the summand's generator
    Int length = 0;  // F[U]/U^length
    friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
    friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

// H as an F[U]-module: one infinite tower plus torsion, torsion sorted by
// (top desc, length desc).
struct GradedModule {
    Int tower_top = 0;
    std::vector<TorsionSummand> torsion;
    friend bool operator==(const GradedModule&, const GradedModule&) = default;
};

// Elder-rule pairing when the complex carries its zigzag, otherwise graded
// change-of-basis reduction of the differential. Requires the localized
// homology to have rank one.
GradedModule homology_of(const IotaComplex& c);

// The two homology routes, exposed for cross-checking.
GradedModule elder_homology(const GradedRoot& r);
GradedModule reduction_homology(const IotaComplex& c);

}  // namespace groot
