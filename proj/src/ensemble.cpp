#include "ri/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace ri {

namespace {

std::vector<double> indicator_values(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) v[idx[i]] = 1.0;
    return v;
}

std::vector<double> family_values(std::mt19937_64& rng, std::size_t n, int family,
                                  int index, int per_family) {
    switch (family) {
        case 0: {  // indicators, support sizes spread over 1..n
            const std::size_t k =
                1 + (static_cast<std::size_t>(index) * (n - 1)) / std::max(1, per_family - 1);
            return indicator_values(rng, n, k);
        }
        case 1: {  // uniform random values
            std::uniform_real_distribution<double> u(0.0, 1.0);
            std::vector<double> v(n);
            for (double& x : v) x = u(rng);
            return v;
        }
        case 2: {  // heavy tail: rank^{-a}, randomly placed
            const double a = 0.5 + 0.5 * (index % 4);
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = std::pow(static_cast<double>(i + 1), -a);
            std::shuffle(v.begin(), v.end(), rng);
            return v;
        }
        default: {  // constants
            std::uniform_real_distribution<double> u(0.25, 2.0);
            return std::vector<double>(n, u(rng));
        }
    }
}

}  // namespace

std::vector<AtomicFunction> make_ensemble_on(const SpacePtr& space, std::uint64_t seed,
                                             int per_family) {
    std::mt19937_64 rng(seed);
    std::vector<AtomicFunction> out;
    out.reserve(4 * static_cast<std::size_t>(per_family));
    for (int family = 0; family < 4; ++family)
        for (int i = 0; i < per_family; ++i)
            out.emplace_back(space, family_values(rng, space->size(), family, i, per_family));
    return out;
}

std::vector<AtomicFunction> make_ensemble(const EnsembleSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> size_dist(spec.min_atoms, spec.max_atoms);
    std::vector<AtomicFunction> out;
    out.reserve(4 * static_cast<std::size_t>(spec.per_family));
    for (int family = 0; family < 4; ++family)
        for (int i = 0; i < spec.per_family; ++i) {
            const SpacePtr space = AtomicMeasureSpace::uniform(size_dist(rng));
            out.emplace_back(space,
                             family_values(rng, space->size(), family, i, spec.per_family));
        }
    return out;
}

std::vector<GroupFunction> make_group_ensemble(std::uint64_t seed, int per_family,
                                               long long window_len) {
    std::mt19937_64 rng(seed);
    const std::size_t n = static_cast<std::size_t>(window_len);
    std::vector<GroupFunction> out;
    for (int family = 0; family < 4; ++family)
        for (int i = 0; i < per_family; ++i) {
            GroupFunction g;
            g.offset = 0;
            g.values = family_values(rng, n, family, i, per_family);
            out.push_back(std::move(g));
        }
    return out;
}

std::vector<AtomicFunction> make_random_functions(std::uint64_t seed, int n,
                                                  std::size_t max_atoms) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_atoms);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> style(0, 3);
    std::vector<AtomicFunction> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::size_t atoms = size_dist(rng);
        std::vector<double> v(atoms);
        for (double& x : v) x = u(rng);
        const int s = style(rng);
        if (s == 1) {  // inject zeros
            for (double& x : v)
                if (std::abs(x) < 0.25) x = 0.0;
        } else if (s == 2 && atoms > 1) {  // inject ties
            for (std::size_t j = 1; j < atoms; j += 2) v[j] = v[j - 1];
        } else if (s == 3) {  // mixed-mass space instead of uniform
            std::vector<double> masses(atoms);
            std::uniform_real_distribution<double> mu(0.25, 4.0);
            for (double& m : masses) m = mu(rng);
            std::vector<std::string> names(atoms);
            for (std::size_t j = 0; j < atoms; ++j) names[j] = std::to_string(j);
            out.emplace_back(AtomicMeasureSpace::make(std::move(names), std::move(masses)),
                             std::move(v));
            continue;
        }
        out.emplace_back(AtomicMeasureSpace::uniform(atoms), std::move(v));
    }
    return out;
}

StepProfile group_profile(const GroupFunction& g) {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(g.values.size());
    for (double v : g.values) pairs.emplace_back(v, 1.0);
    return rearrange_pairs(std::move(pairs));
}

}  // namespace ri
