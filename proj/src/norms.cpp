#include "ri/norms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ri/numeric.hpp"

namespace ri {

namespace {

double modular(const YoungFunction& phi, const StepProfile& p, double k) {
    CompensatedSum acc;
    for (const auto& st : p.steps()) {
        const double v = phi(k * st.value);
        if (std::isinf(v)) return kInf;
        acc.add(st.width * v);
    }
    return acc.value();
}

}  // namespace

double luxemburg_norm(const YoungFunction& phi, const StepProfile& p) {
    if (p.empty()) return 0.0;
    double lo = 1.0, hi = 1.0;
    if (modular(phi, p, 1.0) <= 1.0) {
        while (modular(phi, p, hi) <= 1.0) {
            hi *= 2.0;
            if (hi > 1e300) return 0.0;  // modular never exceeds 1: norm 0
        }
        lo = hi / 2.0;
    } else {
        while (modular(phi, p, lo) > 1.0) {
            lo /= 2.0;
            if (lo < 1e-300) return kInf;
        }
        hi = lo * 2.0;
    }
    // lo is the largest known k with modular <= 1
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (modular(phi, p, mid) <= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 1.0 / lo;
}

double luxemburg_norm(const YoungFunction& phi, const AtomicFunction& f) {
    return luxemburg_norm(phi, decreasing_rearrangement(f));
}

std::pair<double, double> orlicz_norm_bounds(const YoungFunction& phi,
                                             const StepProfile& p) {
    if (p.empty()) return {0.0, 0.0};
    const double lux = luxemburg_norm(phi, p);
    const double upper = 2.0 * lux;

    const YoungPtr psi = complementary_young(phi);
    double lower = 0.0;

    // normalized indicator profiles chi_(0,u): norm in L(psi) is 1/psi^{-1}(1/u)
    std::vector<double> us;
    for (const auto& st : p.steps()) us.push_back(st.cum);
    for (double u : log_grid(p.steps().front().cum / 4.0, p.total_width() * 4.0, 4))
        us.push_back(u);
    for (double u : us) {
        const double inv = young_inverse(*psi, 1.0 / u);
        if (!(inv > 0.0) || std::isinf(inv)) continue;
        lower = std::max(lower, p.integral_to(u) * inv);
    }

    // the profile of f itself, normalized in L(psi)
    const double gnorm = luxemburg_norm(*psi, p);
    if (gnorm > 0.0 && std::isfinite(gnorm)) {
        CompensatedSum acc;
        for (const auto& st : p.steps()) acc.add(st.width * st.value * st.value);
        lower = std::max(lower, acc.value() / gnorm);
    }
    return {lower, upper};
}

std::pair<double, double> orlicz_norm_bounds(const YoungFunction& phi,
                                             const AtomicFunction& f) {
    return orlicz_norm_bounds(phi, decreasing_rearrangement(f));
}

double m_norm(const FundamentalFunction& phi, const StepProfile& p) {
    if (p.empty()) return 0.0;
    double best = 0.0;
    for (const auto& st : p.steps())
        best = std::max(best, double_rearrangement(p, st.cum) * phi(st.cum));
    const double c1 = p.steps().front().cum;
    for (double s : log_grid(c1, p.total_width() * 100.0, 64))
        best = std::max(best, double_rearrangement(p, s) * phi(s));
    return best;
}

double m_norm(const FundamentalFunction& phi, const AtomicFunction& f) {
    return m_norm(phi, decreasing_rearrangement(f));
}

namespace {

// least concave majorant of the points (0,0), (t_i, phi(t_i)) evaluated back
// at the t_i; returned as the list of majorant values aligned with steps
std::vector<double> concave_majorant_at_breakpoints(const FundamentalFunction& phi,
                                                    const StepProfile& p) {
    const auto& steps = p.steps();
    std::vector<std::pair<double, double>> pts;
    pts.reserve(steps.size() + 1);
    pts.emplace_back(0.0, 0.0);
    for (const auto& st : steps) pts.emplace_back(st.cum, phi(st.cum));

    // upper hull, left to right (Andrew monotone chain, concave side)
    std::vector<std::pair<double, double>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (b.first - a.first) * (q.second - a.second) -
                                 (q.first - a.first) * (b.second - a.second);
            if (cross >= 0.0)
                hull.pop_back();  // b under the chord a-q: not on the majorant
            else
                break;
        }
        hull.push_back(q);
    }

    std::vector<double> out(steps.size());
    std::size_t h = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const double t = steps[i].cum;
        while (h + 1 < hull.size() && hull[h + 1].first < t) ++h;
        if (h + 1 >= hull.size()) {
            out[i] = hull.back().second;
            continue;
        }
        const auto& a = hull[h];
        const auto& b = hull[h + 1];
        out[i] = (t >= b.first)
                     ? b.second
                     : a.second + (t - a.first) * (b.second - a.second) / (b.first - a.first);
    }
    return out;
}

}  // namespace

std::pair<double, double> lambda_norm(const FundamentalFunction& phi,
                                      const StepProfile& p) {
    if (p.empty()) return {0.0, 0.0};
    const auto& steps = p.steps();
    const auto maj = concave_majorant_at_breakpoints(phi, p);

    CompensatedSum acc;
    double prev = 0.0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        acc.add(steps[i].value * (maj[i] - prev));
        prev = maj[i];
    }
    const double primary = acc.value();

    // dual lower bound over the unit ball of M(phi*)
    const FundamentalFunction assoc(
        "assoc", [&phi](double t) { return t / phi(t); },
        FundamentalFunction::Origin::associate);
    double dual = 0.0;
    for (const auto& st : steps) {
        const double n = assoc(st.cum);  // exact M(phi*) norm of chi_(0, cum)
        if (n > 0.0) dual = std::max(dual, p.integral_to(st.cum) / n);
    }
    // the majorant-increment profile: nonincreasing, with M(phi*) norm <= 2
    std::vector<std::pair<double, double>> gpairs;
    prev = 0.0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        gpairs.emplace_back((maj[i] - prev) / steps[i].width, steps[i].width);
        prev = maj[i];
    }
    const StepProfile gprof = rearrange_pairs(std::move(gpairs));
    const double gn = m_norm(assoc, gprof);
    if (gn > 0.0) dual = std::max(dual, primary / gn);

    return {primary, dual};
}

std::pair<double, double> lambda_norm(const FundamentalFunction& phi,
                                      const AtomicFunction& f) {
    return lambda_norm(phi, decreasing_rearrangement(f));
}

double mstar_quasinorm(const FundamentalFunction& phi, const StepProfile& p) {
    double best = 0.0;
    for (const auto& st : p.steps()) best = std::max(best, st.value * phi(st.cum));
    return best;
}

double mstar_quasinorm(const FundamentalFunction& phi, const AtomicFunction& f) {
    return mstar_quasinorm(phi, decreasing_rearrangement(f));
}

double mstar_distribution_form(const FundamentalFunction& phi, const AtomicFunction& f) {
    // distinct positive |values|, descending
    std::vector<double> vals;
    for (double v : f.values)
        if (std::abs(v) > 0.0) vals.push_back(std::abs(v));
    if (vals.empty()) return 0.0;
    std::sort(vals.begin(), vals.end(), std::greater<>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    double best = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        // m(f, s) is constant on [next smaller value, vals[i]); the sup of
        // s * phi(m(f, s)) over that interval is attained in the limit s -> vals[i]
        const double probe = (i + 1 < vals.size()) ? vals[i + 1] : vals[i] / 2.0;
        best = std::max(best, vals[i] * phi(distribution_function(f, probe)));
    }
    return best;
}

double evaluate_norm(const NormSpec& spec, const StepProfile& p) {
    switch (spec.kind) {
        case NormKind::luxemburg: return luxemburg_norm(*spec.young, p);
        case NormKind::orlicz_upper: return orlicz_norm_bounds(*spec.young, p).second;
        case NormKind::orlicz_lower: return orlicz_norm_bounds(*spec.young, p).first;
        case NormKind::m_space: return m_norm(*spec.fundamental, p);
        case NormKind::lambda_space: return lambda_norm(*spec.fundamental, p).first;
        case NormKind::mstar_quasi: return mstar_quasinorm(*spec.fundamental, p);
    }
    throw std::logic_error("unreachable");
}

double evaluate_norm(const NormSpec& spec, const AtomicFunction& f) {
    return evaluate_norm(spec, decreasing_rearrangement(f));
}

}  // namespace ri
