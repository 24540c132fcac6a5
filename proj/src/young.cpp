#include "ri/young.hpp"

#include <cmath>
#include <stdexcept>

#include "ri/numeric.hpp"

namespace ri {

namespace {

// golden-section search for the max of a unimodal g over [a, b]
double golden_max(const std::function<double(double)>& g, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
        if (g1 < g2) {
            a = x1; x1 = x2; g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2; x2 = x1; g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    return std::max(g((a + b) / 2), std::max(g1, g2));
}

}  // namespace

YoungPtr parse_young(const std::string& token) {
    if (token.rfind("power:", 0) == 0) {
        const double p = std::stod(token.substr(6));
        if (!(p >= 1.0)) throw std::invalid_argument("power exponent must be >= 1");
        return std::make_shared<YoungFunction>(
            token, [p](double t) { return std::pow(t, p); });
    }
    if (token == "llogl")
        return std::make_shared<YoungFunction>(
            token, [](double t) { return t * std::log1p(t); });
    if (token == "coshm1")
        return std::make_shared<YoungFunction>(
            token, [](double t) { return std::cosh(t) - 1.0; });
    if (token == "expm")
        return std::make_shared<YoungFunction>(
            token, [](double t) { return std::expm1(t) - t; });
    if (token == "entropy")
        return std::make_shared<YoungFunction>(
            token, [](double t) { return (t + 1.0) * std::log1p(t) - t; });
    if (token == "l1capinf")
        return std::make_shared<YoungFunction>(
            token, [](double t) { return t <= 1.0 ? t : kInf; }, 1.0);
    throw std::invalid_argument("unknown Young token: " + token);
}

double young_inverse(const YoungFunction& phi, double u) {
    if (u < 0.0) throw std::invalid_argument("young_inverse: u must be >= 0");
    if (std::isinf(u)) return kInf;
    // bracket: find hi with Phi(hi) > u (or the finite threshold)
    double hi = 1.0;
    if (auto thr = phi.finite_threshold()) {
        if (phi(*thr) <= u) return *thr;
        hi = *thr;
    } else {
        while (phi(hi) <= u) {
            hi *= 2.0;
            if (hi > 1e300) return kInf;
        }
    }
    double lo = 0.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) <= u)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

YoungPtr complementary_young(const YoungFunction& phi) {
    const std::string& tok = phi.token();
    if (tok.rfind("power:", 0) == 0) {
        const double p = std::stod(tok.substr(6));
        if (p == 1.0) {
            // t^1 pairs with the {0, +inf} indicator of [0, 1]
            return std::make_shared<YoungFunction>(
                "conj(power:1)", [](double x) { return x <= 1.0 ? 0.0 : kInf; }, 1.0);
        }
        const double q = p / (p - 1.0);
        return std::make_shared<YoungFunction>(
            "conj(" + tok + ")",
            [p, q](double x) { return (p - 1.0) * std::pow(x / p, q); });
    }
    if (tok == "expm")
        return std::make_shared<YoungFunction>(
            "conj(expm)", [](double x) { return (x + 1.0) * std::log1p(x) - x; });
    if (tok == "entropy")
        return std::make_shared<YoungFunction>(
            "conj(entropy)", [](double x) { return std::expm1(x) - x; });
    if (tok == "coshm1")
        return std::make_shared<YoungFunction>(
            "conj(coshm1)",
            [](double x) { return x * std::asinh(x) - std::sqrt(1.0 + x * x) + 1.0; });
    if (tok == "l1capinf")
        return std::make_shared<YoungFunction>(
            "conj(l1capinf)", [](double x) { return std::max(0.0, x - 1.0); });

    // generic numeric Legendre transform: sup_y (x*y - Phi(y)) with the sup
    // located by golden section on a doubling bracket
    auto self = std::make_shared<YoungFunction>(phi);
    return std::make_shared<YoungFunction>(
        "conj(" + tok + ")", [self](double x) {
            if (x == 0.0) return 0.0;
            auto g = [&](double y) { return x * y - (*self)(y); };
            double b = 1.0;
            // expand until the integrand decreases (convexity kicks in)
            while (g(2.0 * b) > g(b) && b < 1e300) b *= 2.0;
            return std::max(0.0, golden_max(g, 0.0, 2.0 * b));
        });
}

}  // namespace ri
