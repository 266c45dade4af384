#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groot/reproduce.hpp"
#include "groot/serialize.hpp"

using namespace groot;

namespace {

LocalClass random_class(std::mt19937_64& rng) {
    LocalClass c;
    std::uniform_int_distribution<Int> coeff(-5, 5), key(1, 6);
    c.t = coeff(rng);
    for (int i = 0; i < 3; ++i) {
        LocalClass x = class_X(key(rng), coeff(rng));
        c += x;
    }
    return c;
}

}  // namespace

TEST_CASE("atoms") {
    CHECK(class_of_atom(6, 6) == class_T(3));
    CHECK(class_of_atom(8, 0) == class_X(4));
    CHECK(class_of_atom(0, 0).is_zero());
    CHECK_FALSE(class_of_atom(8, 0).shift_rule_used);

    LocalClass shifted = class_of_atom(4, -2);
    CHECK(shifted == class_X(3) - class_T(1));
    CHECK(shifted.shift_rule_used);

    CHECK_THROWS_AS(class_of_atom(3, 1), OddGrading);
    CHECK_THROWS_AS(class_of_atom(0, 2), InvalidParams);
}

TEST_CASE("subroot classes") {
    CHECK(class_of_subroot(MonotoneSubroot({{2, 2}})) == class_T(1));
    for (Int n = 1; n <= 50; ++n) {
        CHECK(class_of_subroot(family_subroot(Family::Y1, n)) ==
              class_X(2 * n) - class_X(n) + class_T(n));
        CHECK(class_of_subroot(family_subroot(Family::Y2, n)) ==
              class_X(2 * n - 1) - class_X(n) + class_T(n));
        CHECK(class_of_subroot(family_subroot(Family::Y3, n)) == class_X(4 * n));
        CHECK_FALSE(class_of_subroot(family_subroot(Family::Y1, n)).shift_rule_used);
    }
    LocalClass c = class_of_subroot(MonotoneSubroot({{0, -2}}));
    CHECK(c == class_X(1) - class_T(1));
    CHECK(c.shift_rule_used);
}

TEST_CASE("manifold classes through the pipeline") {
    CHECK(class_of_manifold(BrieskornTriple(2, 3, 5)) == class_T(1));
    CHECK(class_of_manifold(BrieskornTriple(2, 3, 5).reversed()) == class_T(-1));
    CHECK(class_of_manifold(family_triple(Family::Y3, 1)) == class_X(4));
    CHECK(class_of_manifold(family_triple(Family::B, 2)) == class_X(2));
}

TEST_CASE("kernel elements") {
    CHECK(is_kernel_element(kernel_family(1, 1)).first);
    CHECK(is_kernel_element(kernel_family(3, 1)).first);
    CHECK(is_kernel_element(kernel_family(3, 2)).first);

    auto [zero, cls] = is_kernel_element({{family_triple(Family::B, 1), 1}});
    CHECK_FALSE(zero);
    CHECK(cls == class_X(1));
}

TEST_CASE("vanishing reports") {
    LocalClass zero;
    auto base = vanishing_report(zero, false);
    CHECK(base == std::vector<std::string>{"d_lower", "d", "d_bar", "phi_n (all n >= 1)", "mu_bar"});
    auto full = vanishing_report(zero, true);
    CHECK(full.size() == 20);
    CHECK(std::find(full.begin(), full.end(), "kappa") != full.end());
    CHECK(std::find(full.begin(), full.end(), "kappa_o_7") != full.end());
    CHECK(vanishing_report(class_X(1), true).empty());
}

TEST_CASE("free abelian group laws on random classes") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        LocalClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a - a).is_zero());
        CHECK(a + LocalClass{} == a);
        CHECK(-(-a) == a);
        CHECK(2 * a == a + a);
    }
}

TEST_CASE("string and json forms") {
    LocalClass c = class_X(2) - class_X(1) + class_T(1);
    CHECK(c.str() == "X_2 - X_1 + 1*T");
    CHECK(LocalClass{}.str() == "0");
    CHECK((class_T(-2) + class_X(3, 2)).str() == "2*X_3 - 2*T");

    Json j = to_json(c);
    CHECK(j["T"] == 1);
    CHECK(j["X"]["2"] == 1);
    CHECK(j["X"]["1"] == -1);
    CHECK(j["shiftRuleUsed"] == false);
}
