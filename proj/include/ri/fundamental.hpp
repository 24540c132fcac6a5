#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ri/young.hpp"

namespace ri {

// Quasi-concave gauge: phi(0) = 0, nondecreasing, phi(t)/t nonincreasing.
class FundamentalFunction {
public:
    enum class Origin { from_young, direct, associate };

    using Fn = std::function<double(double)>;

    FundamentalFunction(std::string token, Fn fn, Origin origin)
        : token_(std::move(token)), fn_(std::move(fn)), origin_(origin) {}

    double operator()(double t) const { return t <= 0.0 ? 0.0 : fn_(t); }
    const std::string& token() const { return token_; }
    Origin origin() const { return origin_; }

private:
    std::string token_;
    Fn fn_;
    Origin origin_;
};

using FundPtr = std::shared_ptr<const FundamentalFunction>;

// phi(t) = 1 / Phi^{-1}(1/t)
FundPtr fundamental_from_young(const YoungPtr& phi);

// phi*(t) = t / phi(t), 0 at 0
FundPtr associate_fundamental(const FundPtr& phi);

// Tokens: "power:a" (t^a, 0 < a <= 1) or "young:<young-token>" routed
// through fundamental_from_young. Bare Young tokens are also accepted.
FundPtr parse_fundamental(const std::string& token);

struct GridSpec {
    double lo = 1e-6;
    double hi = 1e6;
    int per_decade = 64;

    std::vector<double> points() const;
};

enum class GrowthCondition { delta2, nabla2, delta_prime, u_class, l_class };

std::string to_string(GrowthCondition c);

struct GrowthCertificate {
    GrowthCondition condition;
    std::string subject;       // token of the certified function
    bool young_form = false;   // true when the Young-function variant was used
    bool pass = false;
    double K = 0.0;            // doubling constant (delta2, delta_prime)
    double ell = 0.0;          // nabla2 constant
    double A = 0.0;            // class constant
    double alpha = 0.0;        // class exponent
    double delta = 0.0;        // class threshold
    double worst_margin = 0.0;
    GridSpec grid;
};

// Fundamental-function forms:
//   delta2   phi(K x) >= 2 phi(x)
//   nabla2   phi(x)   >= (2/l) phi(l x)
//   u_class  phi(t s) >= A t^a phi(s)   for t <= delta
//   l_class  phi(t s) <= A t^a phi(s)   for t <= delta
GrowthCertificate certify_condition(const FundPtr& phi, GrowthCondition cond,
                                    const GridSpec& grid = {});

// Young-function forms:
//   delta2       Phi(2x)  <= K Phi(x)
//   nabla2       Phi(x)   <= (1/(2l)) Phi(l x)
//   delta_prime  Phi(x y) <= K Phi(x) Phi(y)
GrowthCertificate certify_condition(const YoungPtr& phi, GrowthCondition cond,
                                    const GridSpec& grid = {});

struct TailGrowthReport {
    double epsilon = 0.0;
    double p = 0.0;             // exponent actually verified
    bool pass = false;
    double worst_margin = 0.0;  // signed, >= 0 when the bound holds everywhere
};

// From a passing delta2 certificate (constant K): epsilon = 1/(K-1) and
// phi(y x) <= 2 y^p phi(x) for y <= 1, p <= epsilon. From a passing nabla2
// certificate (constant l): epsilon = 1 - 1/(l-1) and the reversed bound
// phi(y x) >= (1/2) y^p phi(x) for p >= epsilon.
TailGrowthReport tail_growth_bounds(const FundPtr& phi, const GrowthCertificate& cert,
                                    const GridSpec& grid = {});

struct ZippinReport {
    double beta_lower = 0.0;
    double beta_upper = 0.0;
    std::vector<std::pair<double, double>> samples;  // (t, M(t))
    bool submultiplicative = false;
};

ZippinReport zippin_indices(const FundPtr& phi, const GridSpec& grid = {});

}  // namespace ri
