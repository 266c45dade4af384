#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groot/reproduce.hpp"
#include "groot/serialize.hpp"
#include "helpers.hpp"

using namespace groot;

namespace {

// Brute-force normalization oracle: enumerate e0 in [-3,-1] and all
// 0 < w_i < a_i, keep the combination with e0 + sum w_i/a_i = -1/(a1 a2 a3).
SeifertData brute_force_normalize(const BrieskornTriple& t) {
    const Rational target(-1, t.product());
    for (Int e0 = -3; e0 <= -1; ++e0)
        for (Int w1 = 1; w1 < t.a1; ++w1)
            for (Int w2 = 1; w2 < t.a2; ++w2)
                for (Int w3 = 1; w3 < t.a3; ++w3) {
                    Rational e = Rational(e0) + Rational(w1, t.a1) + Rational(w2, t.a2) +
                                 Rational(w3, t.a3);
                    if (e == target) {
                        SeifertData d;
                        d.e0 = e0;
                        d.legs = {{t.a1, w1}, {t.a2, w2}, {t.a3, w3}};
                        d.euler = target;
                        return d;
                    }
                }
    throw Error("brute force found no normalization");
}

std::vector<Int> omegas(const SeifertData& d) {
    std::vector<Int> w;
    for (const auto& leg : d.legs) w.push_back(leg.second);
    return w;
}

}  // namespace

TEST_CASE("triple validation and canonical order") {
    BrieskornTriple t(5, 2, 3);
    CHECK(t.a1 == 2);
    CHECK(t.a2 == 3);
    CHECK(t.a3 == 5);
    CHECK(t.str() == "2,3,5");
    CHECK(t.reversed().str() == "-2,3,5");
    CHECK_THROWS_AS(BrieskornTriple(4, 6, 9), InvalidTriple);
    CHECK_THROWS_AS(BrieskornTriple(1, 2, 3), InvalidTriple);
}

TEST_CASE("normalization matches the brute-force oracle on the worked triples") {
    for (auto [x, y, z] : {std::array<Int, 3>{2, 3, 5}, {2, 3, 7}, {3, 4, 13}}) {
        BrieskornTriple t(x, y, z);
        SeifertData got = normalize_seifert(t);
        SeifertData want = brute_force_normalize(t);
        CHECK(got.e0 == want.e0);
        CHECK(omegas(got) == omegas(want));
    }
    CHECK(normalize_seifert(BrieskornTriple(2, 3, 5)).e0 == -2);
    CHECK(omegas(normalize_seifert(BrieskornTriple(2, 3, 5))) == std::vector<Int>{1, 2, 4});
    CHECK(normalize_seifert(BrieskornTriple(2, 3, 7)).e0 == -1);
    CHECK(omegas(normalize_seifert(BrieskornTriple(2, 3, 7))) == std::vector<Int>{1, 1, 1});
    CHECK(normalize_seifert(BrieskornTriple(3, 4, 13)).e0 == -1);
    CHECK(omegas(normalize_seifert(BrieskornTriple(3, 4, 13))) == std::vector<Int>{2, 1, 1});
}

TEST_CASE("negative continued fractions") {
    CHECK(neg_continued_fraction(3, 2) == std::vector<Int>{-2, -2});
    CHECK(neg_continued_fraction(5, 4) == std::vector<Int>{-2, -2, -2, -2});
    CHECK(neg_continued_fraction(7, 1) == std::vector<Int>{-7});
    CHECK(continued_fraction_value({-2, -2}) == Rational(3, 2));
    CHECK_THROWS_AS(neg_continued_fraction(3, 3), InvalidParams);
}

TEST_CASE("plumbing graphs of the worked triples") {
    PlumbingGraph e8 = build_plumbing(normalize_seifert(BrieskornTriple(2, 3, 5)));
    CHECK(e8.center_weight == -2);
    CHECK(e8.vertex_count() == 8);
    for (const auto& leg : e8.legs)
        for (Int w : leg) CHECK(w == -2);
    CHECK(e8.legs[0].size() == 1);
    CHECK(e8.legs[1].size() == 2);
    CHECK(e8.legs[2].size() == 4);

    PlumbingGraph g = build_plumbing(normalize_seifert(BrieskornTriple(3, 4, 13)));
    CHECK(g.center_weight == -1);
    CHECK(g.vertex_count() == 5);
    CHECK(g.legs[0] == std::vector<Int>{-2, -2});
    CHECK(g.legs[1] == std::vector<Int>{-4});
    CHECK(g.legs[2] == std::vector<Int>{-13});

    PlumbingGraph h = build_plumbing(normalize_seifert(BrieskornTriple(2, 3, 7)));
    CHECK(h.center_weight == -1);
    CHECK(h.vertex_count() == 4);
    CHECK(h.legs[0] == std::vector<Int>{-2});
    CHECK(h.legs[1] == std::vector<Int>{-3});
    CHECK(h.legs[2] == std::vector<Int>{-7});
}

TEST_CASE("grading shift and R invariant on the worked triples") {
    PlumbingGraph e8 = build_plumbing(normalize_seifert(BrieskornTriple(2, 3, 5)));
    CHECK(k_squared(e8) == Rational(0));
    CHECK(grading_shift_sigma(e8) == 2);
    CHECK(fintushel_stern_R(e8) == 1);

    PlumbingGraph g237 = build_plumbing(normalize_seifert(BrieskornTriple(2, 3, 7)));
    CHECK(k_squared(g237) == Rational(-4));
    CHECK(grading_shift_sigma(g237) == 0);
    CHECK(fintushel_stern_R(g237) == -1);

    PlumbingGraph g3413 = build_plumbing(normalize_seifert(BrieskornTriple(3, 4, 13)));
    CHECK(k_squared(g3413) == Rational(-29));
    CHECK(grading_shift_sigma(g3413) == -6);
}

TEST_CASE("leg-wise solve and minors agree with the dense Eigen routes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        BrieskornTriple t = random_coprime_triple(rng, 3000);
        PlumbingGraph g = build_plumbing(normalize_seifert(t));
        if (g.vertex_count() > 200) continue;
        CHECK(k_squared(g) == testing::dense_k_squared(g));
        auto fast = leading_principal_minors(g);
        auto dense = testing::bareiss_minors(intersection_matrix(g));
        CHECK(fast == dense);
        Rational det = testing::dense_determinant(g);
        CHECK((det == Rational(1) || det == Rational(-1)));
    }
}

TEST_CASE("plumbing json schema") {
    Json j = to_json(build_plumbing(normalize_seifert(BrieskornTriple(3, 4, 13))));
    CHECK(j["center"] == -1);
    CHECK(j["legs"] == Json::parse("[[-2,-2],[-4],[-13]]"));
    CHECK(j["s"] == 5);
    CHECK(j["K2"] == "-29/1");
    CHECK(j["sigma"] == -6);
}

TEST_CASE("family plumbings keep central weight -2, so R = 1") {
    for (Int n = 1; n <= 20; ++n) {
        for (Family f : {Family::B, Family::Y1, Family::Y2, Family::Y3}) {
            PlumbingGraph g = build_plumbing(normalize_seifert(family_triple(f, n)));
            CHECK(g.center_weight == -2);
            CHECK(fintushel_stern_R(g) == 1);
        }
    }
}

TEST_CASE("normalization is exact and negative definite on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        BrieskornTriple t = random_coprime_triple(rng, 100000);
        SeifertData d = normalize_seifert(t);
        Rational e(d.e0);
        for (const auto& [a, w] : d.legs) e += Rational(w, a);
        CHECK(e == Rational(-1, t.product()));
        CHECK(d.e0 <= -1);

        PlumbingGraph g = build_plumbing(d);  // throws if not negative definite

        // Chains reconstruct the leg fractions.
        Rational sum;
        for (std::size_t leg = 0; leg < g.legs.size(); ++leg)
            sum += Rational(1) / continued_fraction_value(g.legs[leg]);
        CHECK(sum == e - Rational(d.e0));
    }
}

TEST_CASE("sigma is an even integer across random triples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        BrieskornTriple t = random_coprime_triple(rng, 20000);
        Int sigma = grading_shift_sigma(build_plumbing(normalize_seifert(t)));
        CHECK(sigma % 2 == 0);
    }
}
