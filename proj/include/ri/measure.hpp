#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ri {

// Finite atomic measure space: the stand-in for (Omega, mu).
class AtomicMeasureSpace {
public:
    AtomicMeasureSpace(std::vector<std::string> atoms, std::vector<double> masses);

    // n atoms labelled "0".."n-1", each of the given mass.
    static std::shared_ptr<const AtomicMeasureSpace> uniform(std::size_t n, double mass = 1.0);
    static std::shared_ptr<const AtomicMeasureSpace> make(std::vector<std::string> atoms,
                                                          std::vector<double> masses);

    std::size_t size() const { return masses_.size(); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::vector<double>& masses() const { return masses_; }
    double mass(std::size_t i) const { return masses_[i]; }
    double total_mass() const { return total_mass_; }
    // True iff all atoms carry the same mass (the resonant branch).
    bool resonant() const { return resonant_; }

private:
    std::vector<std::string> atoms_;
    std::vector<double> masses_;
    double total_mass_ = 0.0;
    bool resonant_ = true;
};

using SpacePtr = std::shared_ptr<const AtomicMeasureSpace>;

// A measurable function on an atomic space; one finite real value per atom.
struct AtomicFunction {
    SpacePtr space;
    std::vector<double> values;

    AtomicFunction() = default;
    AtomicFunction(SpacePtr s, std::vector<double> v);

    std::size_t size() const { return values.size(); }
};

// Nonincreasing step function on [0, inf): the decreasing rearrangement f*.
// Steps have strictly decreasing positive values; zero values are dropped,
// so the zero function is the empty profile.
class StepProfile {
public:
    struct Step {
        double value;
        double width;    // mass of the step
        double cum;      // cumulative mass up to and including this step
    };

    StepProfile() = default;
    explicit StepProfile(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    double total_width() const { return steps_.empty() ? 0.0 : steps_.back().cum; }
    double max_value() const { return steps_.empty() ? 0.0 : steps_.front().value; }

    // f*(s): right-continuous evaluation, 0 past the support.
    double value_at(double s) const;
    // integral of f* over [0, s]
    double integral_to(double s) const;

    bool operator==(const StepProfile& other) const;

private:
    std::vector<Step> steps_;
};

// Function on a product space Omega1 x Omega2, stored densely (row-major,
// rows indexed by Omega1 atoms). Cell count is capped at 2^20.
class ProductFunction {
public:
    static constexpr std::size_t kCellCap = std::size_t{1} << 20;

    ProductFunction(SpacePtr space1, SpacePtr space2, std::vector<double> values);

    const SpacePtr& space1() const { return space1_; }
    const SpacePtr& space2() const { return space2_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * space2_->size() + j]; }
    const std::vector<double>& values() const { return values_; }

    // cross-section f_{omega1} as a function on Omega2
    AtomicFunction cross_section(std::size_t i) const;

private:
    SpacePtr space1_;
    SpacePtr space2_;
    std::vector<double> values_;
};

// mu({ |f| > s }), strict inequality, compensated mass sum.
double distribution_function(const AtomicFunction& f, double s);
double distribution_function(const ProductFunction& f, double s);

StepProfile decreasing_rearrangement(const AtomicFunction& f);
StepProfile decreasing_rearrangement(const ProductFunction& f);
// rearrangement of a raw (value, mass) list; shared by the field profiles
StepProfile rearrange_pairs(std::vector<std::pair<double, double>> pairs);

// f**(s) = (1/s) * integral of f* over [0, s]
double double_rearrangement(const StepProfile& p, double s);

bool equimeasurable(const AtomicFunction& f, const AtomicFunction& g);
bool equimeasurable(const ProductFunction& f, const ProductFunction& g);

}  // namespace ri
