#include "ri/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ri/numeric.hpp"

namespace ri {

Action::Action(SpacePtr space, std::vector<std::size_t> generator, GroupModel group)
    : space_(std::move(space)), generator_(std::move(generator)), group_(group) {
    const std::size_t n = space_->size();
    if (generator_.size() != n) throw std::invalid_argument("generator size mismatch");
    std::vector<bool> seen(n, false);
    inverse_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = generator_[i];
        if (j >= n || seen[j]) throw std::invalid_argument("generator is not a permutation");
        seen[j] = true;
        inverse_[j] = i;
        if (space_->mass(i) != space_->mass(j))
            throw std::invalid_argument("generator does not preserve atom masses");
    }
    if (group_.cyclic) {
        if (group_.modulus < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
        std::vector<std::size_t> cur(n);
        std::iota(cur.begin(), cur.end(), std::size_t{0});
        for (long long t = 0; t < group_.modulus; ++t)
            for (std::size_t i = 0; i < n; ++i) cur[i] = generator_[cur[i]];
        for (std::size_t i = 0; i < n; ++i)
            if (cur[i] != i)
                throw std::invalid_argument("generator order does not divide the modulus");
    }
}

Action Action::cycle(std::size_t n) {
    std::vector<std::size_t> gen(n);
    for (std::size_t i = 0; i < n; ++i) gen[i] = (i + 1) % n;
    return Action(AtomicMeasureSpace::uniform(n), std::move(gen),
                  GroupModel::cyclic_group(static_cast<long long>(n)));
}

std::size_t Action::map(long long t, std::size_t i) const {
    if (group_.cyclic) t %= group_.modulus;
    std::size_t j = i;
    if (t >= 0)
        for (long long s = 0; s < t; ++s) j = generator_[j];
    else
        for (long long s = 0; s < -t; ++s) j = inverse_[j];
    return j;
}

std::vector<std::size_t> Action::permutation_power(long long t) const {
    const std::size_t n = space_->size();
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = map(t, i);
    return out;
}

long long Kernel::semilocal_radius() const {
    long long r = 0;
    for (long long s : support) r = std::max(r, std::llabs(s));
    return r;
}

double Kernel::weight_at(long long s) const {
    const auto it = std::lower_bound(support.begin(), support.end(), s);
    if (it == support.end() || *it != s) return 0.0;
    return weights[static_cast<std::size_t>(it - support.begin())];
}

Kernel parse_kernel(const std::string& token) {
    Kernel k;
    if (token.rfind("delta:", 0) == 0) {
        k.support = {std::stoll(token.substr(6))};
        k.weights = {1.0};
        return k;
    }
    if (token.rfind("uniform:", 0) == 0) {
        const std::string body = token.substr(8);
        const auto dots = body.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("uniform kernel needs a..b");
        const long long a = std::stoll(body.substr(0, dots));
        const long long b = std::stoll(body.substr(dots + 2));
        if (b < a) throw std::invalid_argument("uniform kernel: b < a");
        const double w = 1.0 / static_cast<double>(b - a + 1);
        for (long long s = a; s <= b; ++s) {
            k.support.push_back(s);
            k.weights.push_back(w);
        }
        return k;
    }
    if (token.rfind("geometric:", 0) == 0) {
        const std::string body = token.substr(10);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("geometric kernel needs q,n");
        const double q = std::stod(body.substr(0, comma));
        const long long n = std::stoll(body.substr(comma + 1));
        if (!(q > 0.0) || q >= 1.0 || n < 0)
            throw std::invalid_argument("geometric kernel needs 0<q<1, n>=0");
        // c * q^|s| on [-n, n], normalized to total weight 1
        CompensatedSum total;
        for (long long s = -n; s <= n; ++s) total.add(std::pow(q, std::llabs(s)));
        for (long long s = -n; s <= n; ++s) {
            k.support.push_back(s);
            k.weights.push_back(std::pow(q, std::llabs(s)) / total.value());
        }
        return k;
    }
    if (token.rfind("birkhoff:", 0) == 0) {
        const long long n = std::stoll(token.substr(9));
        if (n < 1) throw std::invalid_argument("birkhoff kernel needs n >= 1");
        for (long long s = -(n - 1); s <= 0; ++s) {
            k.support.push_back(s);
            k.weights.push_back(1.0 / static_cast<double>(n));
        }
        return k;
    }
    throw std::invalid_argument("unknown kernel token: " + token);
}

long long birkhoff_order(const Kernel& k) {
    const long long n = static_cast<long long>(k.support.size());
    if (n == 0 || k.support.back() != 0 || k.support.front() != -(n - 1)) return 0;
    for (long long s = 0; s < n; ++s) {
        if (k.support[static_cast<std::size_t>(s)] != -(n - 1) + s) return 0;
        if (k.weights[static_cast<std::size_t>(s)] != 1.0 / static_cast<double>(n)) return 0;
    }
    return n;
}

GroupFunction convolve(const Kernel& k, const GroupFunction& g) {
    if (k.support.empty() || g.values.empty()) return {};
    GroupFunction out;
    out.offset = g.offset + k.support.front();
    const std::size_t len =
        g.values.size() + static_cast<std::size_t>(k.support.back() - k.support.front());
    out.values.assign(len, 0.0);
    for (std::size_t j = 0; j < len; ++j) {
        const long long t = out.offset + static_cast<long long>(j);
        CompensatedSum acc;
        for (std::size_t a = 0; a < k.support.size(); ++a)
            acc.add(k.weights[a] * g.at(t - k.support[a]));
        out.values[j] = acc.value();
    }
    return out;
}

AtomicFunction act(const Action& action, long long t, const AtomicFunction& f) {
    if (f.space != action.space())
        throw std::invalid_argument("act: function space mismatch");
    const auto perm = action.permutation_power(t);
    std::vector<double> out(f.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values[perm[i]];
    return AtomicFunction(f.space, std::move(out));
}

AtomicFunction transfer_apply(const Kernel& k, const Action& action,
                              const AtomicFunction& f) {
    if (f.space != action.space())
        throw std::invalid_argument("transfer_apply: function space mismatch");
    const std::size_t n = f.values.size();
    std::vector<double> out(n, 0.0);
    std::vector<CompensatedSum> acc(n);
    for (std::size_t a = 0; a < k.support.size(); ++a) {
        const auto perm = action.permutation_power(-k.support[a]);
        for (std::size_t i = 0; i < n; ++i)
            acc[i].add(k.weights[a] * f.values[perm[i]]);
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = acc[i].value();
    return AtomicFunction(f.space, std::move(out));
}

AtomicFunction maximal_transfer(const std::vector<Kernel>& kernels, const Action& action,
                                const AtomicFunction& f, std::size_t n_max) {
    if (kernels.empty()) throw std::invalid_argument("maximal_transfer: no kernels");
    if (n_max > kernels.size()) throw std::invalid_argument("maximal_transfer: n_max too big");
    std::vector<double> out(f.values.size(), 0.0);
    for (std::size_t n = 0; n < n_max; ++n) {
        const AtomicFunction tf = transfer_apply(kernels[n], action, f);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::max(out[i], std::abs(tf.values[i]));
    }
    return AtomicFunction(f.space, std::move(out));
}

AtomicFunction smooth_via_group(const Kernel& weights, const Action& action,
                                const AtomicFunction& x) {
    std::vector<CompensatedSum> acc(x.values.size());
    for (std::size_t a = 0; a < weights.support.size(); ++a) {
        const AtomicFunction ax = act(action, weights.support[a], x);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i].add(weights.weights[a] * ax.values[i]);
    }
    std::vector<double> out(x.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = acc[i].value();
    return AtomicFunction(x.space, std::move(out));
}

double folner_ratio(long long n, long long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("folner_ratio: lengths must be >= 1");
    return static_cast<double>(n + m - 1) / static_cast<double>(n);
}

long long SkewField::column_of(long long t) const {
    const auto it = std::lower_bound(window.begin(), window.end(), t);
    if (it == window.end() || *it != t) return -1;
    return it - window.begin();
}

AtomicFunction SkewField::column_as_space_function(std::size_t j) const {
    std::vector<double> out(space->size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i, j);
    return AtomicFunction(space, std::move(out));
}

GroupFunction SkewField::row(std::size_t i) const {
    GroupFunction g;
    g.offset = window.front();
    g.values.assign(values.begin() + i * window.size(),
                    values.begin() + (i + 1) * window.size());
    return g;
}

SkewField skew_field(const AtomicFunction& f, const Action& action,
                     const std::vector<long long>& window) {
    if (f.space != action.space())
        throw std::invalid_argument("skew_field: function space mismatch");
    std::vector<long long> w = window;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.size() > SkewField::kColumnCap)
        throw std::invalid_argument("skew_field: window exceeds column cap");
    SkewField field;
    field.space = f.space;
    field.window = std::move(w);
    field.values.assign(f.space->size() * field.window.size(), 0.0);
    for (std::size_t j = 0; j < field.window.size(); ++j) {
        const auto perm = action.permutation_power(field.window[j]);
        for (std::size_t i = 0; i < f.space->size(); ++i)
            field.values[i * field.window.size() + j] = f.values[perm[i]];
    }
    return field;
}

SkewField apply_kernel_field(const Kernel& k, const SkewField& field) {
    if (k.support.empty()) throw std::invalid_argument("apply_kernel_field: empty kernel");
    // contiguous output window: [min(window)+min(supp), max(window)+max(supp)]
    const long long lo = field.window.front() + k.support.front();
    const long long hi = field.window.back() + k.support.back();
    const std::size_t cols = static_cast<std::size_t>(hi - lo + 1);
    if (cols > SkewField::kColumnCap)
        throw std::invalid_argument("apply_kernel_field: output window exceeds cap");

    SkewField out;
    out.space = field.space;
    out.window.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) out.window[j] = lo + static_cast<long long>(j);
    out.values.assign(field.space->size() * cols, 0.0);
    for (std::size_t i = 0; i < field.space->size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const long long t = out.window[j];
            CompensatedSum acc;
            for (std::size_t a = 0; a < k.support.size(); ++a) {
                const long long col = field.column_of(t - k.support[a]);
                acc.add(k.weights[a] * (col >= 0 ? field.at(i, static_cast<std::size_t>(col)) : 0.0));
            }
            out.values[i * cols + j] = acc.value();
        }
    }
    return out;
}

ProductFunction skew_tensor(const AtomicFunction& g, const Kernel& f, const Action& action) {
    if (g.space != action.space())
        throw std::invalid_argument("skew_tensor: function space mismatch");
    std::vector<std::string> atoms;
    for (long long t : f.support) atoms.push_back(std::to_string(t));
    const SpacePtr group_space =
        AtomicMeasureSpace::make(std::move(atoms), std::vector<double>(f.support.size(), 1.0));
    std::vector<double> vals(g.size() * f.support.size());
    for (std::size_t j = 0; j < f.support.size(); ++j) {
        const auto perm = action.permutation_power(f.support[j]);
        for (std::size_t i = 0; i < g.size(); ++i)
            vals[i * f.support.size() + j] = f.weights[j] * g.values[perm[i]];
    }
    return ProductFunction(g.space, group_space, std::move(vals));
}

ProductFunction plain_tensor(const AtomicFunction& g, const Kernel& f) {
    std::vector<std::string> atoms;
    for (long long t : f.support) atoms.push_back(std::to_string(t));
    const SpacePtr group_space =
        AtomicMeasureSpace::make(std::move(atoms), std::vector<double>(f.support.size(), 1.0));
    std::vector<double> vals(g.size() * f.support.size());
    for (std::size_t j = 0; j < f.support.size(); ++j)
        for (std::size_t i = 0; i < g.size(); ++i)
            vals[i * f.support.size() + j] = f.weights[j] * g.values[i];
    return ProductFunction(g.space, group_space, std::move(vals));
}

std::vector<std::vector<double>> birkhoff_averages(const Action& action,
                                                   const AtomicFunction& f,
                                                   std::size_t n_max) {
    if (f.space != action.space())
        throw std::invalid_argument("birkhoff_averages: function space mismatch");
    const std::size_t atoms = f.size();
    std::vector<std::vector<double>> avg(n_max, std::vector<double>(atoms));
    std::vector<std::size_t> cur(atoms);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    std::vector<CompensatedSum> sums(atoms);
    const auto gen = action.permutation_power(1);
    // sums are centered at the atom's own value, so orbits with equal values
    // average to that value exactly instead of accumulating roundoff
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t i = 0; i < atoms; ++i) {
            sums[i].add(f.values[cur[i]] - f.values[i]);
            avg[n - 1][i] = f.values[i] + sums[i].value() / static_cast<double>(n);
            cur[i] = gen[cur[i]];
        }
    }
    return avg;
}

}  // namespace ri
