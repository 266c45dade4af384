#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "groot/families.hpp"
#include "groot/iota.hpp"
#include "groot/local_class.hpp"
#include "groot/rzero.hpp"

namespace groot {

// One verified claim of the reproduction suite.
struct Claim {
    std::string id;
    std::string summary;
    bool pass = false;
    std::string detail;
};

struct ReproduceOptions {
    Int n_pipeline = 8;      // tau-scan range for the family laws
    Int n_closed_form = 50;  // closed-form range for class identities/kernels
    Int cert_a_n = 100;      // B/Y1/Y2 certificate range
    Int cert_b_n = 25;       // B(4n)/Y3 certificate range
    Int scan_n = 100;        // family_scan range
    Int random_triples = 300;
    Int homology_samples = 50;
    Int tensor_pairs = 100;
    Int max_product = 100000;
    std::uint64_t seed = 0x5e1f7ed;
};

// Runs the whole reproduction suite; one Claim per criterion.
std::vector<Claim> reproduce_paper(const ReproduceOptions& opt = {});

// --- independent oracles and sampling helpers (shared with the test suites) ---

// Straight-line recomputation of the tau extrema: materializes the full tau
// array from the ceiling recursion with its own arithmetic and scans it.
// Deliberately independent of TauProfile.
TauExtrema straight_line_tau_extrema(const SeifertData& d, Int horizon);

// Graded F-dimensions of the homology of the U-truncated complex (U^m = 0)
// by plain rank computations over the 2-element field, grading by grading.
std::map<Int, Int> truncated_homology_dims(const IotaComplex& c, Int truncation);

// Dimensions predicted by a GradedModule in gradings [lo, hi].
std::map<Int, Int> predicted_homology_dims(const GradedModule& h, Int lo, Int hi);

// Uniform-ish pairwise coprime triple with a1 a2 a3 <= max_product.
BrieskornTriple random_coprime_triple(std::mt19937_64& rng, Int max_product);

// Random valid parameter list (used to sample synthetic roots).
MonotoneSubroot random_subroot(std::mt19937_64& rng, Int max_pairs = 5);

}  // namespace groot
