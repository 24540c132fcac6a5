#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ri/fundamental.hpp"
#include "ri/numeric.hpp"

using namespace ri;

TEST_CASE("token parsing") {
    CHECK((*parse_fundamental("power:0.5"))(4.0) == doctest::Approx(2.0));
    CHECK((*parse_fundamental("power:1"))(3.0) == doctest::Approx(3.0));
    CHECK_THROWS(parse_fundamental("power:2"));  // not quasi-concave
    CHECK_THROWS(parse_fundamental("nosuch"));

    // the capped gauge has fundamental max(1, t)
    const FundPtr cap = parse_fundamental("l1capinf");
    CHECK((*cap)(0.25) == doctest::Approx(1.0));
    CHECK((*cap)(3.0) == doctest::Approx(3.0));
    CHECK((*cap)(0.0) == 0.0);
}

TEST_CASE("young-derived fundamentals invert the gauge") {
    const FundPtr phi = parse_fundamental("young:power:2");
    for (double t : {0.01, 1.0, 100.0})
        CHECK((*phi)(t) == doctest::Approx(std::sqrt(t)).epsilon(1e-10));
}

TEST_CASE("associate product identity phi phi* = t") {
    for (const std::string tok :
         {"power:0.5", "power:1", "young:llogl", "young:coshm1", "l1capinf"}) {
        const FundPtr phi = parse_fundamental(tok);
        const FundPtr assoc = associate_fundamental(phi);
        for (double t : log_grid(1e-6, 1e6, 8))
            CHECK((*phi)(t) * (*assoc)(t) == doctest::Approx(t).epsilon(1e-9));
    }
}

TEST_CASE("doubling certificate for the square root") {
    const FundPtr root = parse_fundamental("power:0.5");
    const GrowthCertificate cert = certify_condition(root, GrowthCondition::delta2);
    CHECK(cert.pass);
    CHECK(cert.K == doctest::Approx(4.0));

    const TailGrowthReport tail = tail_growth_bounds(root, cert);
    CHECK(tail.pass);
    CHECK(tail.epsilon == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("class certificates") {
    CHECK(certify_condition(parse_fundamental("power:0.5"), GrowthCondition::u_class).pass);
    CHECK(certify_condition(parse_fundamental("power:0.25"), GrowthCondition::l_class).pass);
    // max(1, t) is flat near 0, so no lower power bound can hold
    CHECK_FALSE(certify_condition(parse_fundamental("l1capinf"), GrowthCondition::l_class).pass);
    // the identity gauge has upper index 1 and sits outside the upper class
    CHECK_FALSE(certify_condition(parse_fundamental("power:1"), GrowthCondition::u_class).pass);
}

TEST_CASE("index sandwich for the square root") {
    const FundPtr root = parse_fundamental("power:0.5");
    const GrowthCertificate lo = certify_condition(root, GrowthCondition::l_class);
    const GrowthCertificate hi = certify_condition(root, GrowthCondition::u_class);
    const ZippinReport rep = zippin_indices(root);
    REQUIRE(lo.pass);
    REQUIRE(hi.pass);
    CHECK(lo.alpha <= rep.beta_lower + 0.05);
    CHECK(rep.beta_upper <= hi.alpha + 0.05);
}

TEST_CASE("young-form certificates") {
    const GrowthCertificate d2 = certify_condition(parse_young("llogl"), GrowthCondition::delta2);
    CHECK(d2.pass);
    CHECK(d2.K <= 4.0 + 1e-9);
    CHECK_FALSE(certify_condition(parse_young("coshm1"), GrowthCondition::delta2).pass);
    CHECK(certify_condition(parse_young("power:2"), GrowthCondition::delta_prime).pass);
}

TEST_CASE("dilation indices") {
    for (double p : {2.0, 4.0}) {
        const ZippinReport rep = zippin_indices(parse_fundamental("power:" + std::to_string(1.0 / p)));
        CHECK(rep.submultiplicative);
        CHECK(rep.beta_lower == doctest::Approx(1.0 / p).epsilon(0.05));
        CHECK(rep.beta_upper == doctest::Approx(1.0 / p).epsilon(0.05));
        CHECK(rep.beta_lower <= rep.beta_upper + 1e-12);
    }
    const ZippinReport cap = zippin_indices(parse_fundamental("l1capinf"));
    CHECK(std::abs(cap.beta_lower) <= 0.05);
    CHECK(std::abs(cap.beta_upper - 1.0) <= 0.05);
}
