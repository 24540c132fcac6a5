#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ri/numeric.hpp"
#include "ri/young.hpp"

using namespace ri;

TEST_CASE("token parsing and evaluation") {
    CHECK((*parse_young("power:2"))(3.0) == doctest::Approx(9.0));
    CHECK((*parse_young("llogl"))(1.0) == doctest::Approx(std::log(2.0)));
    CHECK((*parse_young("coshm1"))(1.0) == doctest::Approx(std::cosh(1.0) - 1.0));
    CHECK((*parse_young("expm"))(1.0) == doctest::Approx(std::exp(1.0) - 2.0));
    CHECK((*parse_young("entropy"))(1.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0));
    const YoungPtr cap = parse_young("l1capinf");
    CHECK((*cap)(0.5) == 0.5);
    CHECK((*cap)(1.0) == 1.0);
    CHECK((*cap)(1.5) == kInf);
    CHECK_THROWS(parse_young("power:0.5"));
    CHECK_THROWS(parse_young("nosuch"));
}

TEST_CASE("generalized inverse") {
    CHECK(young_inverse(*parse_young("power:2"), 4.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(young_inverse(*parse_young("power:1"), 0.0) == doctest::Approx(0.0));
    // past the finite threshold the inverse saturates
    CHECK(young_inverse(*parse_young("l1capinf"), 5.0) == doctest::Approx(1.0));
    const YoungPtr llogl = parse_young("llogl");
    for (double t : {0.1, 1.0, 10.0, 100.0})
        CHECK(young_inverse(*llogl, (*llogl)(t)) == doctest::Approx(t).epsilon(1e-10));
}

TEST_CASE("closed-form complementary pairs") {
    // power:p pairs with (p-1)(x/p)^{p/(p-1)}
    const YoungPtr comp2 = complementary_young(*parse_young("power:2"));
    CHECK((*comp2)(2.0) == doctest::Approx(1.0));
    CHECK((*comp2)(4.0) == doctest::Approx(4.0));

    const YoungPtr comp1 = complementary_young(*parse_young("power:1"));
    CHECK((*comp1)(0.5) == 0.0);
    CHECK((*comp1)(2.0) == kInf);

    const YoungPtr comp_exp = complementary_young(*parse_young("expm"));
    for (double x : {0.5, 1.0, 3.0})
        CHECK((*comp_exp)(x) == doctest::Approx((x + 1.0) * std::log(x + 1.0) - x));

    const YoungPtr comp_cosh = complementary_young(*parse_young("coshm1"));
    for (double x : {0.5, 1.0, 3.0})
        CHECK((*comp_cosh)(x) ==
              doctest::Approx(x * std::asinh(x) - std::sqrt(1.0 + x * x) + 1.0));

    const YoungPtr comp_cap = complementary_young(*parse_young("l1capinf"));
    CHECK((*comp_cap)(0.5) == 0.0);
    CHECK((*comp_cap)(3.0) == doctest::Approx(2.0));
}

TEST_CASE("Fenchel inequality and numeric biconjugation") {
    const YoungPtr llogl = parse_young("llogl");
    const YoungPtr comp = complementary_young(*llogl);
    for (double x : {0.25, 1.0, 4.0})
        for (double y : {0.25, 1.0, 4.0})
            CHECK(x * y <= (*llogl)(x) + (*comp)(y) + 1e-12);
    const YoungPtr bicon = complementary_young(*comp);
    for (double t : {0.1, 0.5, 1.0, 5.0, 50.0})
        CHECK((*bicon)(t) == doctest::Approx((*llogl)(t)).epsilon(1e-8));
}
