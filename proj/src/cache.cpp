#include "groot/cache.hpp"

#include <fstream>
#include <json.hpp>

namespace groot {

RootCache::RootCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path RootCache::entry_path(const BrieskornTriple& t) const {
    return dir_ / ("root_" + std::to_string(t.a1) + "_" + std::to_string(t.a2) + "_" +
                   std::to_string(t.a3) + ".v" + std::to_string(kCacheVersion) + ".json");
}

std::optional<CachedRoot> RootCache::load(const BrieskornTriple& t) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(entry_path(t));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
        auto trip = j.at("triple").get<std::vector<Int>>();
        if (trip != std::vector<Int>{t.a1, t.a2, t.a3}) return std::nullopt;
        CachedRoot c;
        c.sigma = j.at("sigma").get<Int>();
        c.minima = j.at("minima").get<std::vector<Int>>();
        c.maxima = j.at("maxima").get<std::vector<Int>>();
        if (c.minima.empty() || c.minima.size() != c.maxima.size() + 1) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt entries are recomputed
    }
}

void RootCache::store(const BrieskornTriple& t, const CachedRoot& value) const {
    if (!enabled()) return;
    nlohmann::json j{{"version", kCacheVersion},
                     {"triple", std::vector<Int>{t.a1, t.a2, t.a3}},
                     {"sigma", value.sigma},
                     {"minima", value.minima},
                     {"maxima", value.maxima}};
    const auto final_path = entry_path(t);
    const auto tmp_path = final_path.string() + ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        if (!out) return;  // cache is an optimization only
        out << j.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) std::filesystem::remove(tmp_path, ec);
}

GradedRoot graded_root_cached(const BrieskornTriple& t, const RootCache& cache) {
    if (!t.positive())
        throw InvalidTriple("graded roots are computed for the positive orientation; "
                            "orientation reversal acts at the class level");
    if (auto hit = cache.load(t)) {
        try {
            TauExtrema ex;
            ex.minima = hit->minima;
            ex.maxima = hit->maxima;
            GradedRoot root = root_from_extrema(hit->sigma, ex);
            if (root.symmetric()) return root;
        } catch (const Error&) {
            // inconsistent entry: recompute below and overwrite
        }
    }
    SeifertData d = normalize_seifert(t);
    PlumbingGraph g = build_plumbing(d);
    const Int sigma = grading_shift_sigma(g);
    TauProfile profile;
    profile.data = d;
    profile.horizon = checked_mul(2, t.product());
    TauExtrema ex = profile.extrema();
    GradedRoot root = root_from_extrema(sigma, ex);
    if (!root.symmetric()) throw AsymmetricRoot("graded root of " + t.str() + " is not palindromic");
    cache.store(t, CachedRoot{sigma, ex.minima, ex.maxima});
    return root;
}

}  // namespace groot
