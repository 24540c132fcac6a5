#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ri/ensemble.hpp"
#include "ri/measure.hpp"

using namespace ri;

namespace {

AtomicFunction fn(std::vector<double> masses, std::vector<double> values) {
    std::vector<std::string> atoms(masses.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i] = "a" + std::to_string(i);
    return {AtomicMeasureSpace::make(std::move(atoms), std::move(masses)), std::move(values)};
}

}  // namespace

TEST_CASE("rearrangement orders magnitudes and accumulates mass") {
    const AtomicFunction f = fn({0.5, 0.25, 0.25}, {-3.0, 1.0, 2.0});
    const StepProfile p = decreasing_rearrangement(f);
    REQUIRE(p.steps().size() == 3);
    CHECK(p.steps()[0].value == 3.0);
    CHECK(p.steps()[0].cum == 0.5);
    CHECK(p.steps()[1].value == 2.0);
    CHECK(p.steps()[1].cum == 0.75);
    CHECK(p.steps()[2].value == 1.0);
    CHECK(p.steps()[2].cum == 1.0);
}

TEST_CASE("ties coalesce and zeros are dropped") {
    const AtomicFunction f = fn({0.25, 0.25, 0.25, 0.25}, {1.0, -1.0, 0.0, 2.0});
    const StepProfile p = decreasing_rearrangement(f);
    REQUIRE(p.steps().size() == 2);
    CHECK(p.steps()[0].value == 2.0);
    CHECK(p.steps()[1].value == 1.0);
    CHECK(p.steps()[1].width == 0.5);
    CHECK(p.total_width() == 0.75);

    const StepProfile zero = decreasing_rearrangement(fn({1.0, 1.0}, {0.0, 0.0}));
    CHECK(zero.empty());
}

TEST_CASE("distribution function of an indicator") {
    const AtomicFunction f = fn({0.25, 0.25, 0.5}, {1.0, 1.0, 0.0});
    CHECK(distribution_function(f, 0.5) == 0.5);
    CHECK(distribution_function(f, 0.0) == 0.5);
    CHECK(distribution_function(f, 1.0) == 0.0);
}

TEST_CASE("double rearrangement dominates the rearrangement") {
    const AtomicFunction f = fn({1.0, 1.0}, {2.0, 1.0});
    const StepProfile p = decreasing_rearrangement(f);
    CHECK(double_rearrangement(p, 3.0) == doctest::Approx(1.0));
    for (double s : {0.5, 1.0, 1.5, 2.0, 5.0})
        CHECK(double_rearrangement(p, s) >= p.value_at(s));
}

TEST_CASE("Galois relation between rearrangement and distribution") {
    const auto fns = make_random_functions(kDefaultSeed, 50, 128);
    for (const auto& f : fns) {
        const StepProfile p = decreasing_rearrangement(f);
        for (const auto& st : p.steps()) {
            for (const auto& su : p.steps()) {
                const double s = su.cum;
                const double t = st.value;
                CHECK((p.value_at(s) > t) == (distribution_function(f, t) > s));
            }
            CHECK(distribution_function(f, st.value) <= st.cum);
        }
    }
}

TEST_CASE("equimeasurability is exact under value shuffles on uniform spaces") {
    const SpacePtr space = AtomicMeasureSpace::uniform(32, 1.0 / 32);
    const auto fns = make_ensemble_on(space, 7u, 2);
    for (const auto& f : fns) {
        std::vector<double> rev(f.values.rbegin(), f.values.rend());
        CHECK(equimeasurable(f, AtomicFunction(space, std::move(rev))));
    }
}

TEST_CASE("product function cross sections and rearrangement") {
    const SpacePtr s1 = AtomicMeasureSpace::uniform(2, 0.5);
    const SpacePtr s2 = AtomicMeasureSpace::uniform(2, 0.5);
    const ProductFunction f(s1, s2, {4.0, 3.0, 2.0, 1.0});
    CHECK(f.cross_section(0).values == std::vector<double>{4.0, 3.0});
    CHECK(f.cross_section(1).values == std::vector<double>{2.0, 1.0});

    const StepProfile p = decreasing_rearrangement(f);
    REQUIRE(p.steps().size() == 4);
    CHECK(p.steps()[0].value == 4.0);
    CHECK(p.steps()[0].width == 0.25);
    CHECK(p.total_width() == 1.0);
}

TEST_CASE("rearrange_pairs matches the atomic route") {
    const AtomicFunction f = fn({0.5, 0.25, 0.25}, {-3.0, 1.0, 2.0});
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < f.size(); ++i)
        pairs.emplace_back(f.values[i], f.space->mass(i));
    CHECK(rearrange_pairs(std::move(pairs)) == decreasing_rearrangement(f));
}
