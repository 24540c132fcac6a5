#pragma once

#include <optional>
#include <utility>

#include "ri/fundamental.hpp"
#include "ri/measure.hpp"
#include "ri/young.hpp"

namespace ri {

// All functionals consume the decreasing rearrangement only, so
// equimeasurable inputs produce bit-identical results.

double luxemburg_norm(const YoungFunction& phi, const StepProfile& p);
double luxemburg_norm(const YoungFunction& phi, const AtomicFunction& f);

// (lower, upper): lower = dictionary sup of integral f* g* over unit-ball
// profiles g of the complementary gauge; upper = 2 * Luxemburg.
std::pair<double, double> orlicz_norm_bounds(const YoungFunction& phi,
                                             const StepProfile& p);
std::pair<double, double> orlicz_norm_bounds(const YoungFunction& phi,
                                             const AtomicFunction& f);

// sup_s f**(s) phi(s)
double m_norm(const FundamentalFunction& phi, const StepProfile& p);
double m_norm(const FundamentalFunction& phi, const AtomicFunction& f);

// (primary, dual-sup lower bound). Primary integrates f* against the least
// concave majorant of phi on the profile's breakpoint hull; the dual form
// is kept as a lower-bound estimator (equivalent within a factor 2).
std::pair<double, double> lambda_norm(const FundamentalFunction& phi,
                                      const StepProfile& p);
std::pair<double, double> lambda_norm(const FundamentalFunction& phi,
                                      const AtomicFunction& f);

// sup_s f*(s) phi(s); exact on step profiles.
double mstar_quasinorm(const FundamentalFunction& phi, const StepProfile& p);
double mstar_quasinorm(const FundamentalFunction& phi, const AtomicFunction& f);

// Independent route to the same supremum through the distribution function:
// sup_s s * phi(m(f, s)).
double mstar_distribution_form(const FundamentalFunction& phi, const AtomicFunction& f);

enum class NormKind { luxemburg, orlicz_upper, orlicz_lower, m_space, lambda_space, mstar_quasi };

struct NormSpec {
    NormKind kind;
    YoungPtr young;    // luxemburg / orlicz kinds
    FundPtr fundamental;  // m / lambda / mstar kinds

    static NormSpec with_young(NormKind k, YoungPtr y) { return {k, std::move(y), nullptr}; }
    static NormSpec with_fundamental(NormKind k, FundPtr f) { return {k, nullptr, std::move(f)}; }
};

double evaluate_norm(const NormSpec& spec, const StepProfile& p);
double evaluate_norm(const NormSpec& spec, const AtomicFunction& f);

}  // namespace ri
