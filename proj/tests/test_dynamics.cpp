#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ri/dynamics.hpp"
#include "ri/ensemble.hpp"

using namespace ri;

TEST_CASE("cycle action shifts forward") {
    const Action a = Action::cycle(3);
    const AtomicFunction f(a.space(), {1.0, 2.0, 3.0});
    CHECK(act(a, 1, f).values == std::vector<double>{2.0, 3.0, 1.0});
    CHECK(act(a, -1, f).values == std::vector<double>{3.0, 1.0, 2.0});
    CHECK(act(a, 3, f).values == f.values);  // generator order divides the modulus
}

TEST_CASE("action validation") {
    const SpacePtr space = AtomicMeasureSpace::make({"a", "b"}, {0.25, 0.75});
    CHECK_THROWS(Action(space, {0, 0}, GroupModel::integers()));     // not a bijection
    CHECK_THROWS(Action(space, {1, 0}, GroupModel::integers()));     // mass not preserved
    CHECK_THROWS(Action(AtomicMeasureSpace::uniform(3, 1.0), {1, 2, 0},
                        GroupModel::cyclic_group(2)));               // order 3 does not divide 2
}

TEST_CASE("kernel tokens") {
    const Kernel b = parse_kernel("birkhoff:3");
    CHECK(b.support == std::vector<long long>{-2, -1, 0});
    CHECK(b.weights == std::vector<double>(3, 1.0 / 3.0));
    CHECK(birkhoff_order(b) == 3);
    CHECK(birkhoff_order(parse_kernel("delta:0")) == 1);
    CHECK(birkhoff_order(parse_kernel("uniform:0..2")) == 0);
    CHECK(parse_kernel("delta:4").support == std::vector<long long>{4});
    CHECK(parse_kernel("geometric:0.5,2").support ==
          std::vector<long long>{-2, -1, 0, 1, 2});
    CHECK(parse_kernel("birkhoff:4").semilocal_radius() == 3);
    CHECK_THROWS(parse_kernel("birkhoff:0"));
    CHECK_THROWS(parse_kernel("geometric:1.5,2"));
}

TEST_CASE("transfer by a Birkhoff kernel is the forward average") {
    const Action a = Action::cycle(3);
    const AtomicFunction f(a.space(), {1.0, 2.0, 3.0});
    const AtomicFunction tf = transfer_apply(parse_kernel("birkhoff:2"), a, f);
    CHECK(tf.values[0] == doctest::Approx(1.5));
    CHECK(tf.values[1] == doctest::Approx(2.5));
    CHECK(tf.values[2] == doctest::Approx(2.0));

    // delta kernels translate
    const AtomicFunction d = transfer_apply(parse_kernel("delta:1"), a, f);
    CHECK(d.values == act(a, -1, f).values);
    CHECK(transfer_apply(parse_kernel("delta:0"), a, f).values == f.values);
}

TEST_CASE("transfer commutes with the action exactly") {
    const Action a = Action::cycle(8);
    const auto ensemble = make_ensemble_on(a.space(), 21u, 2);
    const Kernel k = parse_kernel("birkhoff:3");
    for (const auto& f : ensemble)
        for (long long t : {1LL, 3LL, -2LL})
            CHECK(act(a, t, transfer_apply(k, a, f)).values ==
                  transfer_apply(k, a, act(a, t, f)).values);
}

TEST_CASE("convolution oracle") {
    const Kernel k = parse_kernel("birkhoff:2");
    GroupFunction g;
    g.offset = 0;
    g.values = {1.0, 2.0};
    const GroupFunction out = convolve(k, g);
    CHECK(out.at(-1) == doctest::Approx(0.5));
    CHECK(out.at(0) == doctest::Approx(1.5));
    CHECK(out.at(1) == doctest::Approx(1.0));
    CHECK(out.at(2) == 0.0);
}

TEST_CASE("Folner ratio") {
    CHECK(folner_ratio(100, 5) == doctest::Approx(1.04));
    CHECK(folner_ratio(10, 1) == doctest::Approx(1.0));
}

TEST_CASE("skew field columns are equimeasurable with f") {
    const Action a = Action::cycle(8);
    const auto ensemble = make_ensemble_on(a.space(), 22u, 2);
    const std::vector<long long> window{-3, -2, -1, 0, 1, 2, 3};
    for (const auto& f : ensemble) {
        const SkewField field = skew_field(f, a, window);
        const StepProfile base = decreasing_rearrangement(f);
        for (std::size_t j = 0; j < window.size(); ++j)
            CHECK(decreasing_rearrangement(field.column_as_space_function(j)) == base);
    }
}

TEST_CASE("kernel application on fields matches the transferred operator") {
    const Action a = Action::cycle(8);
    const AtomicFunction f(a.space(), {3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0});
    const Kernel k = parse_kernel("birkhoff:3");
    const long long r = k.semilocal_radius();
    std::vector<long long> window;
    for (long long t = -r; t <= r; ++t) window.push_back(t);
    const SkewField out = apply_kernel_field(k, skew_field(f, a, window));
    const long long j = out.column_of(0);
    REQUIRE(j >= 0);
    CHECK(out.column_as_space_function(static_cast<std::size_t>(j)).values ==
          transfer_apply(k, a, f).values);
}

TEST_CASE("skew and plain tensors are equimeasurable") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(rng() % 28);
        const Action a = Action::cycle(n);
        std::vector<double> values(n);
        for (double& v : values) v = unif(rng);
        const AtomicFunction g(a.space(), values);
        Kernel f;
        for (long long s = -3; s <= 3; ++s) {
            f.support.push_back(s);
            f.weights.push_back(unif(rng));
        }
        CHECK(decreasing_rearrangement(skew_tensor(g, f, a)) ==
              decreasing_rearrangement(plain_tensor(g, f)));
    }
}

TEST_CASE("Birkhoff averages stream correctly and stabilize on cycles") {
    const Action a = Action::cycle(4);
    const AtomicFunction f(a.space(), {1.0, 2.0, 3.0, 4.0});
    const auto avgs = birkhoff_averages(a, f, 8);
    CHECK(avgs[0] == f.values);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(avgs[3][i] == doctest::Approx(2.5));  // full-cycle mean
        CHECK(avgs[7][i] == doctest::Approx(2.5));
    }

    // maximal transfer is nondecreasing in the family cutoff
    std::vector<Kernel> kernels;
    for (std::size_t n = 1; n <= 8; ++n)
        kernels.push_back(parse_kernel("birkhoff:" + std::to_string(n)));
    const AtomicFunction m4 = maximal_transfer(kernels, a, f, 4);
    const AtomicFunction m8 = maximal_transfer(kernels, a, f, 8);
    for (std::size_t i = 0; i < 4; ++i) CHECK(m4.values[i] <= m8.values[i]);
}

TEST_CASE("smoothing commutes with transfer on cycles") {
    const Action a = Action::cycle(8);
    const AtomicFunction f(a.space(), {3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0});
    const Kernel k = parse_kernel("birkhoff:3");
    const Kernel w = parse_kernel("uniform:-1..1");
    const AtomicFunction lhs = smooth_via_group(w, a, transfer_apply(k, a, f));
    const AtomicFunction rhs = transfer_apply(k, a, smooth_via_group(w, a, f));
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(lhs.values[i] == doctest::Approx(rhs.values[i]).epsilon(1e-12));
}
