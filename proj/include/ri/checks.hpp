#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ri/dynamics.hpp"
#include "ri/ensemble.hpp"
#include "ri/fundamental.hpp"
#include "ri/measure.hpp"
#include "ri/norms.hpp"

namespace ri {

inline constexpr double kIneqTol = 1e-9;  // multiplicative slack on inequality checks

struct CheckRecord {
    std::string check_name;
    std::string anchor;  // citation key of the inequality being exercised
    nlohmann::json params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::string caveat;

    nlohmann::json to_json() const;
};

// rhs >= lhs up to the multiplicative tolerance
CheckRecord make_upper_check(std::string name, std::string anchor, double lhs, double rhs,
                             nlohmann::json params = {}, double tol = kIneqTol);

using OperatorHandle = std::function<AtomicFunction(const AtomicFunction&)>;
using GroupOperator = std::function<GroupFunction(const GroupFunction&)>;

struct WeakTypeEstimate {
    double c_hat = 0.0;
    std::size_t witness = 0;  // index of the maximizing ensemble member
};

// c_hat = max over the ensemble of ||op f||_{M*(phi_Y)} / ||f||_X.
// A lower bound for the true operator norm; reports label it "empirical".
// Asserts the two-formula equality for the M* functional on every member.
WeakTypeEstimate weak_type_estimate(const OperatorHandle& op, const NormSpec& X,
                                    const FundPtr& phi_Y,
                                    const std::vector<AtomicFunction>& ensemble);

double group_weak_type_estimate(const GroupOperator& op, const NormSpec& X,
                                const FundPtr& phi_Y,
                                const std::vector<GroupFunction>& ensemble);

// sup_{n <= n_max} |forward window average of length n| on the group
GroupFunction group_maximal_birkhoff(const GroupFunction& g, std::size_t n_max);

// integral of |Tf|^sigma over A  <=  c^sigma/(1-sigma) [phi*(|A|)]^sigma |A|^{1-sigma} ||f||_X^sigma
CheckRecord kolmogorov_forward(double c, double sigma, const std::vector<std::size_t>& A,
                               const AtomicFunction& Tf, double f_norm_X,
                               const FundPtr& phi_Y);

double kolmogorov_converse_bound(double c, double sigma);

// re-verification: ||Tf||_{M*(phi_Y)} <= converse_bound(c, sigma) * ||f||_X
CheckRecord kolmogorov_converse_check(double c, double sigma, const AtomicFunction& Tf,
                                      double f_norm_X, const FundPtr& phi_Y);

// Parts 1..3; Young functions are passed and fundamentals derived from them.
// Hypothesis theta*phi_A(st) >= phi_B(s) phi_C(t) is grid-certified first.
CheckRecord oneil_product_check(int part, const YoungPtr& phi_A, const YoungPtr& phi_B,
                                const YoungPtr& phi_C, double theta,
                                const ProductFunction& f, const std::vector<std::size_t>& E);

// Counting bound |Ebar| >= |K| |E| over the field window, exact; with c > 0
// additionally verifies the per-atom bound phi_Y(|Ebar_omega|) <= (c/lambda) ||F_omega||_X.
CheckRecord calderon_counting_check(const Kernel& k, const Action& action,
                                    const AtomicFunction& f, double lambda, long long k_len,
                                    double c = 0.0, const NormSpec* X = nullptr,
                                    const FundPtr& phi_Y = nullptr);

// (Ttilde F_{KU^{-1}})^*(t) >= (T#f)^*(t / |K|), checked on every interval of
// the merged breakpoint partition; exact.
CheckRecord domination_profile_check(const Kernel& k, const Action& action,
                                     const AtomicFunction& f, long long k_len);

struct MaximalWeakTypeConfig {
    FundPtr phi_A, phi_W, phi_X, phi_Y, phi_Z;
    double theta1 = 1.0;
    double theta2 = 1.0;
    NormSpec group_X;                 // norm used on the group side
    std::vector<GroupFunction> group_ensemble;
    std::size_t n_max = 64;           // Birkhoff family is k_1 .. k_{n_max}
    GridSpec grid;
};

// ||T#_N chi_A||_{M*(phi_Z)} <= (theta1 + 1) theta2 c phi_W(|A|)
CheckRecord maximal_weak_type_bound_check(const MaximalWeakTypeConfig& cfg,
                                          const Action& action,
                                          const std::vector<std::size_t>& A);

struct StrongTypeConfig {
    YoungPtr phi_A;                       // intermediate space in the chain
    YoungPtr phi_B, phi_C, phi_D, phi_E;  // Luxemburg spaces in the factorization
    double theta1 = 1.0;
    double theta2 = 1.0;
    std::vector<Kernel> kernels;
    GroupFunction ell0, ell1;  // pointwise factorization of sup_n |k_n|
};

// ||sup_{n<=N} |T#_n f| ||_{L(Phi_C)} <= theta1 theta2 ||l1||_{L(Phi_B)} ||l0||_{L(Phi_E)} ||f||_{L(Phi_D)}
CheckRecord strong_type_factorization_check(const StrongTypeConfig& cfg, const Action& action,
                                            const AtomicFunction& f);

struct OscillationReport {
    CheckRecord record;
    std::vector<double> oscillation;  // per atom
    double sup_oscillation = 0.0;
};

// Birkhoff family: truncated oscillation over n, m in [m_window, tail_n]
// against twice the maximal average; the two-sided comparison is exact.
OscillationReport oscillation_convergence_check(const Action& action, const AtomicFunction& f,
                                                std::size_t m_window, std::size_t tail_n);

std::vector<CheckRecord> statphys_suite(const GridSpec& grid = {});

}  // namespace ri
