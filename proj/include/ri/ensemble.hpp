#pragma once

#include <cstdint>
#include <vector>

#include "ri/dynamics.hpp"
#include "ri/measure.hpp"

namespace ri {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct EnsembleSpec {
    std::uint64_t seed = kDefaultSeed;
    int per_family = 32;
    std::size_t min_atoms = 16;
    std::size_t max_atoms = 256;
};

// Four families: indicators (support sizes spread over 1..n, random
// placement), uniform random values, heavy tails (value = rank^{-a},
// randomly placed), constants. Deterministic for a fixed seed.
std::vector<AtomicFunction> make_ensemble_on(const SpacePtr& space, std::uint64_t seed,
                                             int per_family);

// Same families over freshly drawn unit-mass spaces of 16..256 atoms.
std::vector<AtomicFunction> make_ensemble(const EnsembleSpec& spec = {});

// Group-side analogue: functions supported on [0, window_len) in Z.
std::vector<GroupFunction> make_group_ensemble(std::uint64_t seed, int per_family,
                                               long long window_len);

// n random functions on random unit-mass spaces of up to max_atoms atoms;
// values uniform in [-1, 1] with a sprinkling of ties and zeros.
std::vector<AtomicFunction> make_random_functions(std::uint64_t seed, int n,
                                                  std::size_t max_atoms);

// decreasing rearrangement of a group function under counting measure
StepProfile group_profile(const GroupFunction& g);

}  // namespace ri
