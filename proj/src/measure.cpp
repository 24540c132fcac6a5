#include "ri/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ri/numeric.hpp"

namespace ri {

AtomicMeasureSpace::AtomicMeasureSpace(std::vector<std::string> atoms,
                                       std::vector<double> masses)
    : atoms_(std::move(atoms)), masses_(std::move(masses)) {
    if (atoms_.size() != masses_.size())
        throw std::invalid_argument("atom/mass count mismatch");
    if (masses_.empty()) throw std::invalid_argument("empty measure space");
    CompensatedSum total;
    for (double m : masses_) {
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("atom masses must be positive and finite");
        total.add(m);
        if (m != masses_.front()) resonant_ = false;
    }
    total_mass_ = total.value();
    if (!std::isfinite(total_mass_)) throw std::invalid_argument("total mass not finite");
}

std::shared_ptr<const AtomicMeasureSpace> AtomicMeasureSpace::uniform(std::size_t n,
                                                                      double mass) {
    std::vector<std::string> atoms(n);
    for (std::size_t i = 0; i < n; ++i) atoms[i] = std::to_string(i);
    return std::make_shared<AtomicMeasureSpace>(std::move(atoms),
                                                std::vector<double>(n, mass));
}

std::shared_ptr<const AtomicMeasureSpace> AtomicMeasureSpace::make(
    std::vector<std::string> atoms, std::vector<double> masses) {
    return std::make_shared<AtomicMeasureSpace>(std::move(atoms), std::move(masses));
}

AtomicFunction::AtomicFunction(SpacePtr s, std::vector<double> v)
    : space(std::move(s)), values(std::move(v)) {
    if (!space) throw std::invalid_argument("null space");
    if (values.size() != space->size())
        throw std::invalid_argument("value count does not match space");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("function values must be finite");
}

double StepProfile::value_at(double s) const {
    // steps are right-open intervals [cum_{i-1}, cum_i)
    for (const Step& st : steps_)
        if (s < st.cum) return st.value;
    return 0.0;
}

double StepProfile::integral_to(double s) const {
    CompensatedSum acc;
    double lo = 0.0;
    for (const Step& st : steps_) {
        const double hi = std::min(s, st.cum);
        if (hi <= lo) break;
        acc.add(st.value * (hi - lo));
        lo = st.cum;
        if (st.cum >= s) break;
    }
    return acc.value();
}

bool StepProfile::operator==(const StepProfile& other) const {
    if (steps_.size() != other.steps_.size()) return false;
    for (std::size_t i = 0; i < steps_.size(); ++i)
        if (steps_[i].value != other.steps_[i].value ||
            steps_[i].width != other.steps_[i].width)
            return false;
    return true;
}

ProductFunction::ProductFunction(SpacePtr space1, SpacePtr space2,
                                 std::vector<double> values)
    : space1_(std::move(space1)), space2_(std::move(space2)), values_(std::move(values)) {
    if (!space1_ || !space2_) throw std::invalid_argument("null space");
    const std::size_t cells = space1_->size() * space2_->size();
    if (cells > kCellCap) throw std::invalid_argument("product space exceeds cell cap");
    if (values_.size() != cells)
        throw std::invalid_argument("value count does not match product space");
}

AtomicFunction ProductFunction::cross_section(std::size_t i) const {
    const std::size_t n2 = space2_->size();
    std::vector<double> row(values_.begin() + i * n2, values_.begin() + (i + 1) * n2);
    return AtomicFunction(space2_, std::move(row));
}

namespace {

// Atoms sorted by |value| descending (index ties keep input order). The
// distribution function and the rearrangement both accumulate masses along
// this order, so their prefix sums are bit-identical.
std::vector<std::size_t> sorted_order(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(values[a]) > std::abs(values[b]);
    });
    return idx;
}

double distribution_from_pairs(const std::vector<double>& values,
                               const std::vector<double>& masses, double s) {
    const auto order = sorted_order(values);
    CompensatedSum acc;
    for (std::size_t i : order) {
        if (!(std::abs(values[i]) > s)) break;
        acc.add(masses[i]);
    }
    return acc.value();
}

StepProfile rearrange(const std::vector<double>& values,
                      const std::vector<double>& masses) {
    const auto order = sorted_order(values);
    std::vector<StepProfile::Step> steps;
    CompensatedSum cum;
    double prev_cum = 0.0;
    for (std::size_t k = 0; k < order.size();) {
        const double v = std::abs(values[order[k]]);
        std::size_t k2 = k;
        while (k2 < order.size() && std::abs(values[order[k2]]) == v) {
            cum.add(masses[order[k2]]);
            ++k2;
        }
        if (v > 0.0) {
            const double c = cum.value();
            steps.push_back({v, c - prev_cum, c});
            prev_cum = c;
        }
        k = k2;
    }
    return StepProfile(std::move(steps));
}

}  // namespace

double distribution_function(const AtomicFunction& f, double s) {
    if (s < 0.0) throw std::invalid_argument("distribution_function: s must be >= 0");
    return distribution_from_pairs(f.values, f.space->masses(), s);
}

double distribution_function(const ProductFunction& f, double s) {
    if (s < 0.0) throw std::invalid_argument("distribution_function: s must be >= 0");
    std::vector<double> masses;
    masses.reserve(f.values().size());
    for (std::size_t i = 0; i < f.space1()->size(); ++i)
        for (std::size_t j = 0; j < f.space2()->size(); ++j)
            masses.push_back(f.space1()->mass(i) * f.space2()->mass(j));
    return distribution_from_pairs(f.values(), masses, s);
}

StepProfile decreasing_rearrangement(const AtomicFunction& f) {
    return rearrange(f.values, f.space->masses());
}

StepProfile decreasing_rearrangement(const ProductFunction& f) {
    std::vector<double> masses;
    masses.reserve(f.values().size());
    for (std::size_t i = 0; i < f.space1()->size(); ++i)
        for (std::size_t j = 0; j < f.space2()->size(); ++j)
            masses.push_back(f.space1()->mass(i) * f.space2()->mass(j));
    return rearrange(f.values(), masses);
}

StepProfile rearrange_pairs(std::vector<std::pair<double, double>> pairs) {
    std::vector<double> values, masses;
    values.reserve(pairs.size());
    masses.reserve(pairs.size());
    for (const auto& [v, m] : pairs) {
        values.push_back(v);
        masses.push_back(m);
    }
    return rearrange(values, masses);
}

double double_rearrangement(const StepProfile& p, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("double_rearrangement: s must be > 0");
    return p.integral_to(s) / s;
}

bool equimeasurable(const AtomicFunction& f, const AtomicFunction& g) {
    return decreasing_rearrangement(f) == decreasing_rearrangement(g);
}

bool equimeasurable(const ProductFunction& f, const ProductFunction& g) {
    return decreasing_rearrangement(f) == decreasing_rearrangement(g);
}

}  // namespace ri
