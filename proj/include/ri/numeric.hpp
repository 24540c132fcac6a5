#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace ri {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Kahan-compensated accumulator; deterministic for a fixed visit order.
class CompensatedSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

inline double compensated_sum(const std::vector<double>& xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

// Log-spaced points over [lo, hi], points_per_decade samples per decade,
// endpoints always included.
inline std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
    std::vector<double> pts;
    const double llo = std::log10(lo);
    const double lhi = std::log10(hi);
    const int n = std::max(1, static_cast<int>(std::ceil((lhi - llo) * points_per_decade)));
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        pts.push_back(std::pow(10.0, llo + (lhi - llo) * i / n));
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

inline bool nearly_equal(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace ri
