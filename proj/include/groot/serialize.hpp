#pragma once

#include <json.hpp>

#include "groot/graded_root.hpp"
#include "groot/iota.hpp"
#include "groot/local_class.hpp"
#include "groot/monotone.hpp"
#include "groot/rzero.hpp"

namespace groot {

using Json = nlohmann::json;

// {"center": int, "legs": [[int,...],...], "s": int, "K2": "p/q", "sigma": int}
Json to_json(const PlumbingGraph& g);

// {"sigma": int, "leaves": [int,...], "angles": [int,...], "symmetric": true}
Json to_json(const GradedRoot& r);

// {"params": [[h,r],...]}
Json to_json(const MonotoneSubroot& m);

// {"gens": [{"name","gr","kind"}...], "diff": {"a1": [["v1",p],...]}, "J": {...}}
Json to_json(const IotaComplex& c);

// {"T": int, "X": {"1": int,...}, "shiftRuleUsed": bool}
Json to_json(const LocalClass& c);

Json to_json(const IndependenceCertificate& cert);

Json to_json(const FamilyScanReport& rep);

// Merge-tree rendering: one node per leaf and per angle plus a stem node,
// edges pointing down-merge; node labels are gradings.
std::string to_dot(const GradedRoot& r);

}  // namespace groot
