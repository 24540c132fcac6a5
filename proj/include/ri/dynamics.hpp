#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ri/measure.hpp"

namespace ri {

// Abelian additive groups only: the integers or a cyclic group Z/N.
struct GroupModel {
    bool cyclic = false;
    long long modulus = 0;  // N >= 1 when cyclic

    static GroupModel integers() { return {false, 0}; }
    static GroupModel cyclic_group(long long n) { return {true, n}; }
};

// Measure-preserving action generated by a single mass-preserving atom
// permutation (the time-1 map); alpha_t = generator^t, t possibly negative.
class Action {
public:
    Action(SpacePtr space, std::vector<std::size_t> generator, GroupModel group);

    static Action cycle(std::size_t n);  // shift by one on a uniform n-cycle

    const SpacePtr& space() const { return space_; }
    const GroupModel& group() const { return group_; }

    // index of alpha_t(atom i)
    std::size_t map(long long t, std::size_t i) const;
    std::vector<std::size_t> permutation_power(long long t) const;

private:
    SpacePtr space_;
    std::vector<std::size_t> generator_;
    std::vector<std::size_t> inverse_;
    GroupModel group_;
};

// Finitely supported kernel on the group; support is kept sorted ascending.
struct Kernel {
    std::vector<long long> support;
    std::vector<double> weights;

    // half-width of the smallest symmetric interval [-u, u] containing support
    long long semilocal_radius() const;
    double weight_at(long long s) const;
};

// Tokens: delta:a | uniform:a..b | geometric:q,n | birkhoff:n.
// birkhoff:n is (1/n) on {-(n-1), ..., 0}, so the transferred operator is the
// forward average over {0, ..., n-1}.
Kernel parse_kernel(const std::string& token);

// Is this kernel birkhoff:n for some n? Returns n, or 0.
long long birkhoff_order(const Kernel& k);

// Finitely supported function on the group, dense on [offset, offset+size).
struct GroupFunction {
    long long offset = 0;
    std::vector<double> values;

    double at(long long t) const {
        const long long i = t - offset;
        return (i >= 0 && i < static_cast<long long>(values.size()))
                   ? values[static_cast<std::size_t>(i)]
                   : 0.0;
    }
};

// (k*g)(t) = sum_s k(s) g(t-s)
GroupFunction convolve(const Kernel& k, const GroupFunction& g);

// alpha_t(f)(omega) = f(alpha_t(omega))
AtomicFunction act(const Action& action, long long t, const AtomicFunction& f);

// T#f(omega) = sum_s k(s) f(alpha_{-s}(omega))
AtomicFunction transfer_apply(const Kernel& k, const Action& action,
                              const AtomicFunction& f);

// pointwise max of |T#_n f| over the first n_max kernels
AtomicFunction maximal_transfer(const std::vector<Kernel>& kernels, const Action& action,
                                const AtomicFunction& f, std::size_t n_max);

// sum_t weights(t) * act(t, x)
AtomicFunction smooth_via_group(const Kernel& weights, const Action& action,
                                const AtomicFunction& x);

// |K - U| / |K| for integer intervals of lengths n and m
double folner_ratio(long long n, long long m);

// matrix F(omega, t) = f(alpha_t(omega)) over a finite window of group elements
struct SkewField {
    SpacePtr space;
    std::vector<long long> window;   // sorted ascending
    std::vector<double> values;      // row-major: atom index, then window index

    static constexpr std::size_t kColumnCap = std::size_t{1} << 16;

    double at(std::size_t i, std::size_t j) const { return values[i * window.size() + j]; }
    long long column_of(long long t) const;  // index in window, or -1
    AtomicFunction column_as_space_function(std::size_t j) const;  // fixed t
    GroupFunction row(std::size_t i) const;  // fixed omega, as a group function
};

SkewField skew_field(const AtomicFunction& f, const Action& action,
                     const std::vector<long long>& window);

// row-by-row convolution of the field with k; output window is the
// Minkowski sum of the field window and supp(k)
SkewField apply_kernel_field(const Kernel& k, const SkewField& field);

// (g (x)_alpha f)(omega, t) = f(t) g(alpha_t(omega)); the second factor space
// is the support of f with unit (counting) masses
ProductFunction skew_tensor(const AtomicFunction& g, const Kernel& f, const Action& action);
ProductFunction plain_tensor(const AtomicFunction& g, const Kernel& f);

// Forward Birkhoff averages (1/n) sum_{j<n} f(alpha_j omega) for n = 1..n_max,
// streamed via per-atom running sums; row n-1 holds the order-n average.
std::vector<std::vector<double>> birkhoff_averages(const Action& action,
                                                   const AtomicFunction& f,
                                                   std::size_t n_max);

}  // namespace ri
