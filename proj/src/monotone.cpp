#include "groot/monotone.hpp"

#include <algorithm>

namespace groot {

MonotoneSubroot::MonotoneSubroot(std::vector<std::pair<Int, Int>> p) : params(std::move(p)) {
    if (params.empty()) throw InvalidParams("monotone subroot needs at least one pair");
    const std::size_t n = params.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto [h, r] = params[i];
        if (h % 2 != 0 || r % 2 != 0) throw InvalidParams("subroot parameters must be even");
        if (i + 1 < n) {
            if (h <= r) throw InvalidParams("h_i > r_i required before the last pair");
            if (params[i + 1].first >= h) throw InvalidParams("h must be strictly decreasing");
            if (params[i + 1].second <= r) throw InvalidParams("r must be strictly increasing");
        } else if (h < r) {
            throw InvalidParams("h_n >= r_n required");
        }
    }
}

std::string MonotoneSubroot::str() const {
    std::string s = "M(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(params[i].first) + "," + std::to_string(params[i].second);
    }
    return s + ")";
}

MonotoneSubroot extract_monotone(const GradedRoot& r) {
    if (!r.symmetric()) throw AsymmetricRoot("monotone subroot extraction needs a symmetric root");
    const auto& L = r.leaves();
    const auto& A = r.angles();
    const std::size_t k = L.size();

    // Candidate pairs from the left half: (leaf, lowest angle up to the mirror leaf).
    std::vector<std::pair<Int, Int>> cands;
    for (std::size_t i = 0; 2 * i + 1 <= k; ++i) {
        const std::size_t mirror = k - 1 - i;
        if (i == mirror) {
            cands.emplace_back(L[i], L[i]);
        } else {
            Int merge = A[i];
            for (std::size_t j = i + 1; j < mirror; ++j) merge = std::min(merge, A[j]);
            cands.emplace_back(L[i], merge);
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // Pareto frontier under componentwise <=.
    std::vector<std::pair<Int, Int>> frontier;
    for (const auto& c : cands) {
        bool dominated = false;
        for (const auto& o : cands)
            if (o != c && c.first <= o.first && c.second <= o.second) {
                dominated = true;
                break;
            }
        if (!dominated) frontier.push_back(c);
    }
    std::sort(frontier.begin(), frontier.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return MonotoneSubroot(std::move(frontier));
}

GradedRoot realize_subroot(const MonotoneSubroot& m) {
    const auto& p = m.params;
    const std::size_t n = p.size();
    const bool fixed_middle = p[n - 1].first == p[n - 1].second;

    // L = h1..h_{n-1}, middle, h_{n-1}..h1 with the middle either the fixed
    // leaf at r_n or the mirrored pair h_n, h_n joined at r_n.
    std::vector<Int> L, A;
    const std::size_t outer = fixed_middle ? n - 1 : n;
    for (std::size_t i = 0; i < outer; ++i) L.push_back(p[i].first);
    if (fixed_middle) L.push_back(p[n - 1].first);
    for (std::size_t i = outer; i-- > 0;) L.push_back(p[i].first);

    for (std::size_t i = 0; i < outer; ++i) A.push_back(p[i].second);
    const std::size_t back = fixed_middle ? outer : outer - 1;
    for (std::size_t i = back; i-- > 0;) A.push_back(p[i].second);

    // Realized subroots are abstract roots: sigma is plumbing provenance and
    // is carried as 0 here.
    return GradedRoot(0, std::move(L), std::move(A));
}

std::pair<Int, Int> involutive_correction_terms(const MonotoneSubroot& m) {
    return {m.params.front().first, m.params.back().second};
}

}  // namespace groot
