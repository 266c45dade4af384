#include "groot/serialize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groot {

Json to_json(const PlumbingGraph& g) {
    Json legs = Json::array();
    for (const auto& leg : g.legs) legs.push_back(leg);
    const Rational k2 = k_squared(g);
    return Json{{"center", g.center_weight},
                {"legs", legs},
                {"s", g.vertex_count()},
                {"K2", std::to_string(k2.num()) + "/" + std::to_string(k2.den())},
                {"sigma", grading_shift_sigma(g)}};
}

Json to_json(const GradedRoot& r) {
    return Json{{"sigma", r.sigma()},
                {"leaves", r.leaves()},
                {"angles", r.angles()},
                {"symmetric", r.symmetric()}};
}

Json to_json(const MonotoneSubroot& m) {
    Json params = Json::array();
    for (const auto& [h, rr] : m.params) params.push_back(Json::array({h, rr}));
    return Json{{"params", params}};
}

Json to_json(const IotaComplex& c) {
    Json gens = Json::array();
    for (const auto& g : c.gens)
        gens.push_back(Json{{"name", g.name}, {"gr", g.grading}, {"kind", g.kind == GenKind::Leaf ? "leaf" : "angle"}});
    Json diff = Json::object();
    for (std::size_t i = 0; i < c.diff.size(); ++i) {
        if (c.diff[i].empty()) continue;
        Json terms = Json::array();
        for (const UTerm& t : c.diff[i]) terms.push_back(Json::array({c.gens[t.gen].name, t.power}));
        diff[c.gens[i].name] = terms;
    }
    Json inv = Json::object();
    for (std::size_t i = 0; i < c.J.size(); ++i) inv[c.gens[i].name] = c.gens[c.J[i]].name;
    return Json{{"gens", gens}, {"diff", diff}, {"J", inv}};
}

Json to_json(const LocalClass& c) {
    Json x = Json::object();
    for (const auto& [k, v] : c.x) x[std::to_string(k)] = v;
    return Json{{"T", c.t}, {"X", x}, {"shiftRuleUsed", c.shift_rule_used}};
}

Json to_json(const IndependenceCertificate& cert) {
    Json fam = Json::array();
    for (const auto& t : cert.family) fam.push_back(Json::array({t.a1, t.a2, t.a3}));
    Json rvals = Json::array();
    for (const auto& r : cert.r0_neg)
        rvals.push_back(r ? Json(r->str()) : Json(nullptr));
    return Json{{"family", fam},
                {"r0_neg", rvals},
                {"checks",
                 Json{{"allPositiveSideInfinite", cert.checks.all_positive_side_infinite},
                      {"allFinite", cert.checks.all_finite},
                      {"allDistinct", cert.checks.all_distinct},
                      {"rInvariantsPositive", cert.checks.r_invariants_positive}}},
                {"verdict", cert.verdict},
                {"theorem", "NST24 r0 independence"}};
}

Json to_json(const FamilyScanReport& rep) {
    return Json{{"nMax", rep.n_max},
                {"checks",
                 Json{{"parity", rep.parity},
                      {"avoidsThirty", rep.avoids_thirty},
                      {"interleaving", rep.interleaving},
                      {"modFour", rep.mod_four}}},
                {"verdict", rep.all_pass()}};
}

std::string to_dot(const GradedRoot& r) {
    const auto& L = r.leaves();
    const auto& A = r.angles();
    const std::size_t k = L.size();

    std::ostringstream out;
    out << "digraph graded_root {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (std::size_t i = 0; i < k; ++i)
        out << "  v" << i + 1 << " [label=\"" << L[i] << "\"];\n";
    for (std::size_t i = 0; i < A.size(); ++i)
        out << "  a" << i + 1 << " [label=\"" << A[i] << "\"];\n";
    out << "  stem [shape=plaintext, label=\"...\"];\n";

    // Down-merge edges in elder order: each merge joins the current
    // representatives of the two adjacent components at that angle.
    std::vector<std::size_t> order(A.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return A[a] != A[b] ? A[a] > A[b] : a < b;
    });
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::string> rep_node(k);
    for (std::size_t i = 0; i < k; ++i) rep_node[i] = "v" + std::to_string(i + 1);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i : order) {
        const std::size_t a = find(i), b = find(i + 1);
        const std::string node = "a" + std::to_string(i + 1);
        out << "  " << rep_node[a] << " -> " << node << ";\n";
        out << "  " << rep_node[b] << " -> " << node << ";\n";
        parent[a] = b;
        rep_node[b] = node;
    }
    out << "  " << rep_node[find(0)] << " -> stem;\n";
    out << "}\n";
    return out.str();
}

}  // namespace groot
