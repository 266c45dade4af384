#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groot/monotone.hpp"

namespace groot {

// The standard Brieskorn families:
//   B(0) = sigma(2,3,5),  B(n) = sigma(2n+1, 4n+1, 4n+3)
//   Y1(n) = sigma(4n+1, 6n+2, 12n+1)
//   Y2(n) = sigma(4n-1, 6n-2, 12n-1)
//   Y3(n) = sigma(8n+1, 12n+1, 24n+5)
enum class Family { B, Y1, Y2, Y3 };

BrieskornTriple family_triple(Family f, Int n);

// Closed-form monotone subroots: B(0) -> M(2,2), B(n) -> M(2n,0),
// Y1(n) -> M(4n,0;2n,2n), Y2(n) -> M(4n-2,0;2n,2n), Y3(n) -> M(8n,0).
MonotoneSubroot family_subroot(Family f, Int n);

const char* family_name(Family f);

// One term of a connected sum expression.
struct SumTerm {
    BrieskornTriple triple;
    Int multiplicity = 1;
    std::optional<std::pair<Family, Int>> token;  // set when written as B(n)/Y1(n)/...
};

// "Y1(1) # -B(2) # B(1) # -B(0)"; terms are family tokens or raw triples,
// optionally prefixed by a sign and an integer multiplier ("-3*B(0)").
std::vector<SumTerm> parse_connected_sum(const std::string& expr);

// Accepts "2,3,5", "-2,3,5", "B(4)", "-Y1(2)".
BrieskornTriple parse_triple(const std::string& text);

// The displayed kernel families (which = 1, 2, 3):
//   1: Y1(n) # -B(2n) # B(n) # -n B(0)
//   2: Y2(n) # -B(2n-1) # B(n) # -n B(0)
//   3: Y3(n) # -B(4n)
std::vector<std::pair<BrieskornTriple, Int>> kernel_family(int which, Int n);

}  // namespace groot
