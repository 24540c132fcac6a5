#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace ri {

// Convex increasing function on [0, inf) with Phi(0) = 0 and Phi -> inf.
// May jump to +inf past a finite threshold (extended-real convention).
class YoungFunction {
public:
    using Fn = std::function<double(double)>;

    YoungFunction(std::string token, Fn fn,
                  std::optional<double> finite_threshold = std::nullopt)
        : token_(std::move(token)), fn_(std::move(fn)),
          finite_threshold_(finite_threshold) {}

    double operator()(double t) const { return fn_(t); }
    const std::string& token() const { return token_; }
    // largest t with Phi(t) < inf, if the function has an infinite tail
    std::optional<double> finite_threshold() const { return finite_threshold_; }

private:
    std::string token_;
    Fn fn_;
    std::optional<double> finite_threshold_;
};

using YoungPtr = std::shared_ptr<const YoungFunction>;

// Parses a Young-function token:
//   power:p    t^p (p >= 1)
//   llogl      t * log(t + 1)
//   coshm1     cosh(t) - 1
//   expm       exp(t) - t - 1
//   entropy    (t + 1) * log(t + 1) - t
//   l1capinf   t for t <= 1, +inf past 1
YoungPtr parse_young(const std::string& token);

// Generalized inverse: sup{ t : Phi(t) <= u }. For u = 0 returns the largest
// t with Phi(t) = 0.
double young_inverse(const YoungFunction& phi, double u);

// Complementary function Psi(x) = sup_y { x*y - Phi(y) }. Closed forms are
// used where the token admits one; otherwise the sup is located numerically.
YoungPtr complementary_young(const YoungFunction& phi);

}  // namespace ri
