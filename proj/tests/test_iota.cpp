#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groot/reproduce.hpp"
#include "groot/serialize.hpp"

using namespace groot;

namespace {

IotaComplex tower_complex(Int grading) { return standard_complex_of(GradedRoot(0, {grading}, {})); }

}  // namespace

TEST_CASE("standard complexes of the worked roots") {
    IotaComplex c = standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 7)));
    REQUIRE(c.gens.size() == 3);
    CHECK(c.gens[0].grading == 0);
    CHECK(c.gens[1].grading == 0);
    CHECK(c.gens[2].grading == -1);  // angle at A+1
    CHECK(c.gens[2].kind == GenKind::Angle);
    REQUIRE(c.diff[2].size() == 2);
    CHECK(c.diff[2][0] == UTerm{0, 1});
    CHECK(c.diff[2][1] == UTerm{1, 1});

    IotaComplex tower = standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 5)));
    CHECK(tower.gens.size() == 1);
    CHECK(tower.diff[0].empty());

    IotaComplex big = standard_complex_of(graded_root_of(BrieskornTriple(3, 4, 13)));
    REQUIRE(big.gens.size() == 11);
    // d(alpha_3) = U v3 + U v4: exponents (0 - (-2))/2 = 1 on both sides
    CHECK(big.diff[8] == std::vector<UTerm>{{2, 1}, {3, 1}});
    verify_complex_axioms(big);
}

TEST_CASE("json serialization of a complex") {
    Json j = to_json(standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 7))));
    CHECK(j["gens"].size() == 3);
    CHECK(j["diff"]["a1"] == Json::parse(R"([["v1",1],["v2",1]])"));
    CHECK(j["J"]["v1"] == "v2");
}

TEST_CASE("homology of the worked complexes") {
    GradedModule poincare = homology_of(standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 5))));
    CHECK(poincare.tower_top == 2);
    CHECK(poincare.torsion.empty());

    GradedModule g237 = homology_of(standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 7))));
    CHECK(g237.tower_top == 0);
    REQUIRE(g237.torsion.size() == 1);
    CHECK(g237.torsion[0] == TorsionSummand{0, 1});

    CHECK(homology_of(tower_complex(6)).tower_top == 6);
    CHECK(homology_of(tower_complex(6)).torsion.empty());
}

TEST_CASE("tensor products") {
    GradedModule four = reduction_homology(tensor_product(tower_complex(2), tower_complex(2)));
    CHECK(four.tower_top == 4);
    CHECK(four.torsion.empty());

    IotaComplex m0m2 = standard_complex_of(realize_subroot(MonotoneSubroot({{0, -2}})));
    CHECK(reduction_homology(tensor_product(m0m2, tower_complex(2))).tower_top == 2);

    IotaComplex c = standard_complex_of(graded_root_of(BrieskornTriple(3, 4, 13)));
    GradedModule via_unit = homology_of(tensor_product(c, tower_complex(0)));
    CHECK(via_unit == homology_of(c));
}

TEST_CASE("axioms and route agreement on random roots and tensors") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        BrieskornTriple t = random_coprime_triple(rng, 4000);
        IotaComplex c = standard_complex_of(graded_root_of(t));
        verify_complex_axioms(c);
        GradedModule elder = homology_of(c);
        CHECK(elder == reduction_homology(c));
        CHECK(elder.tower_top == d_invariant(graded_root_of(t)));
    }
    for (int i = 0; i < 15; ++i) {
        IotaComplex c1 = standard_complex_of(realize_subroot(random_subroot(rng)));
        IotaComplex c2 = standard_complex_of(realize_subroot(random_subroot(rng)));
        IotaComplex prod = tensor_product(c1, c2);
        verify_complex_axioms(prod);
        CHECK(reduction_homology(prod).tower_top ==
              homology_of(c1).tower_top + homology_of(c2).tower_top);
    }
}

TEST_CASE("truncated linear-algebra oracle on small roots") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 10; ++i) {
        IotaComplex c = standard_complex_of(realize_subroot(random_subroot(rng)));
        GradedModule h = homology_of(c);
        Int lo = c.gens[0].grading, hi = c.gens[0].grading;
        for (const auto& g : c.gens) {
            lo = std::min(lo, g.grading);
            hi = std::max(hi, g.grading);
        }
        auto oracle = truncated_homology_dims(c, (hi - lo) / 2 + 2);
        auto predicted = predicted_homology_dims(h, lo, hi);
        for (Int g = lo; g <= hi; ++g) {
            Int got = oracle.count(g) ? oracle[g] : 0;
            CHECK(got == predicted[g]);
        }
    }
}
