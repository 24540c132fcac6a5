#include "ri/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ri/numeric.hpp"

namespace ri {

std::vector<double> GridSpec::points() const {
    return log_grid(lo, hi, per_decade);
}

std::string to_string(GrowthCondition c) {
    switch (c) {
        case GrowthCondition::delta2: return "delta2";
        case GrowthCondition::nabla2: return "nabla2";
        case GrowthCondition::delta_prime: return "delta-prime";
        case GrowthCondition::u_class: return "u-class";
        case GrowthCondition::l_class: return "l-class";
    }
    return "?";
}

FundPtr fundamental_from_young(const YoungPtr& phi) {
    return std::make_shared<FundamentalFunction>(
        "young:" + phi->token(),
        [phi](double t) {
            const double inv = young_inverse(*phi, 1.0 / t);
            if (inv == 0.0) throw std::domain_error("degenerate Young function");
            return 1.0 / inv;
        },
        FundamentalFunction::Origin::from_young);
}

FundPtr associate_fundamental(const FundPtr& phi) {
    return std::make_shared<FundamentalFunction>(
        "assoc(" + phi->token() + ")",
        [phi](double t) {
            const double v = (*phi)(t);
            if (v == 0.0) throw std::domain_error("degenerate fundamental function");
            return t / v;
        },
        FundamentalFunction::Origin::associate);
}

FundPtr parse_fundamental(const std::string& token) {
    if (token.rfind("power:", 0) == 0) {
        const double a = std::stod(token.substr(6));
        if (!(a > 0.0) || a > 1.0)
            throw std::invalid_argument("fundamental power exponent must be in (0, 1]");
        // sqrt is correctly rounded, so phi(4x) == 2 phi(x) holds bitwise
        auto eval = a == 0.5 ? std::function<double(double)>([](double t) { return std::sqrt(t); })
                             : std::function<double(double)>([a](double t) { return std::pow(t, a); });
        return std::make_shared<FundamentalFunction>(token, std::move(eval),
                                                     FundamentalFunction::Origin::direct);
    }
    if (token.rfind("young:", 0) == 0)
        return fundamental_from_young(parse_young(token.substr(6)));
    return fundamental_from_young(parse_young(token));
}

namespace {

// candidate constants: 1 + 1e-6, then quarter-octave powers of two up to 1e6
std::vector<double> constant_candidates() {
    std::vector<double> ks;
    ks.push_back(1.0 + 1e-6);
    for (int j = 1; j <= 80; ++j) ks.push_back(std::pow(2.0, j / 4.0));
    return ks;
}

// worst (most negative) margin of m(x) >= 0 over pts, deterministic order
template <typename M>
double worst_margin_over(const std::vector<double>& pts, M margin) {
    double worst = kInf;
    for (double x : pts) worst = std::min(worst, margin(x));
    return worst;
}

std::vector<double> subsample(const std::vector<double>& pts, std::size_t stride) {
    std::vector<double> out;
    for (std::size_t i = 0; i < pts.size(); i += stride) out.push_back(pts[i]);
    if (out.back() != pts.back()) out.push_back(pts.back());
    return out;
}

// alpha candidates on a sixteenths grid in (0, 1)
std::vector<double> alpha_candidates() {
    std::vector<double> as;
    for (int j = 1; j <= 15; ++j) as.push_back(j / 16.0);
    return as;
}

GrowthCertificate certify_class(const FundamentalFunction& phi, GrowthCondition cond,
                                const GridSpec& grid) {
    GrowthCertificate cert;
    cert.condition = cond;
    cert.subject = phi.token();
    cert.grid = grid;
    cert.delta = 1.0;
    const auto s_pts = subsample(grid.points(), 4);
    std::vector<double> t_pts;
    for (double t : s_pts)
        if (t <= cert.delta) t_pts.push_back(t);

    const bool upper = (cond == GrowthCondition::l_class);
    // dilation profile: the s-extremal ratio phi(ts)/phi(s) at each t;
    // u-class is constrained by the min over s, l-class by the max
    auto dilation = [&](double t) {
        double best = upper ? 0.0 : kInf;
        for (double s : s_pts) {
            const double d = phi(s);
            if (d == 0.0) return upper ? kInf : 0.0;
            const double r = phi(t * s) / d;
            best = upper ? std::max(best, r) : std::min(best, r);
        }
        return best;
    };
    std::vector<double> dil;
    dil.reserve(t_pts.size());
    for (double t : t_pts) dil.push_back(dilation(t));

    // secant slope of the dilation profile over the smallest t decade; the
    // power bound can only persist as t -> 0 if alpha is consistent with it
    // (u-class needs alpha above the decay rate, l-class alpha below it),
    // so a flat profile near zero rules out every positive alpha
    double slope = 0.0;
    {
        const double t0 = t_pts.front();
        std::size_t j = 1;
        while (j + 1 < t_pts.size() && t_pts[j] < 10.0 * t0) ++j;
        if (dil.front() > 0.0 && dil[j] > 0.0 && t_pts[j] > t0)
            slope = (std::log(dil[j]) - std::log(dil.front())) /
                    (std::log(t_pts[j]) - std::log(t0));
    }
    constexpr double kSlopeTol = 0.05;

    // u-class: report the smallest admissible alpha (tightest statement);
    // l-class the largest
    const auto alphas = alpha_candidates();
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        const double alpha = upper ? alphas[alphas.size() - 1 - j] : alphas[j];
        if (upper ? alpha > slope + kSlopeTol : alpha < slope - kSlopeTol) continue;
        double a0 = upper ? 0.0 : kInf;
        for (std::size_t i = 0; i < t_pts.size(); ++i) {
            const double r = dil[i] / std::pow(t_pts[i], alpha);
            a0 = upper ? std::max(a0, r) : std::min(a0, r);
        }
        if (!(a0 > 0.0) || !std::isfinite(a0)) continue;
        // nudge inside the extremal value so every grid margin is >= 0
        const double A = upper ? a0 * (1.0 + 1e-12) : a0 * (1.0 - 1e-12);
        if (A < 1e-6 || A > 1e6) continue;
        double worst = kInf;
        for (double t : t_pts)
            for (double s : s_pts) {
                const double bound = A * std::pow(t, alpha) * phi(s);
                const double lhs = phi(t * s);
                worst = std::min(worst, upper ? bound - lhs : lhs - bound);
            }
        if (worst >= 0.0) {
            cert.pass = true;
            cert.A = A;
            cert.alpha = alpha;
            cert.worst_margin = worst;
            return cert;
        }
    }
    cert.pass = false;
    cert.worst_margin = -kInf;
    return cert;
}

}  // namespace

GrowthCertificate certify_condition(const FundPtr& phi, GrowthCondition cond,
                                    const GridSpec& grid) {
    if (cond == GrowthCondition::u_class || cond == GrowthCondition::l_class)
        return certify_class(*phi, cond, grid);
    if (cond == GrowthCondition::delta_prime)
        throw std::invalid_argument("delta-prime is a Young-function condition");

    GrowthCertificate cert;
    cert.condition = cond;
    cert.subject = phi->token();
    cert.grid = grid;
    const auto pts = grid.points();

    if (cond == GrowthCondition::delta2) {
        for (double K : constant_candidates()) {
            const double worst = worst_margin_over(
                pts, [&](double x) { return (*phi)(K * x) - 2.0 * (*phi)(x); });
            if (worst >= 0.0) {
                cert.pass = true;
                cert.K = K;
                cert.worst_margin = worst;
                return cert;
            }
            cert.worst_margin = worst;
        }
    } else {  // nabla2: phi(x) >= (2/l) phi(l x)
        for (double ell : constant_candidates()) {
            const double worst = worst_margin_over(
                pts, [&](double x) { return (*phi)(x) - (2.0 / ell) * (*phi)(ell * x); });
            if (worst >= 0.0) {
                cert.pass = true;
                cert.ell = ell;
                cert.worst_margin = worst;
                return cert;
            }
            cert.worst_margin = worst;
        }
    }
    cert.pass = false;
    return cert;
}

GrowthCertificate certify_condition(const YoungPtr& phi, GrowthCondition cond,
                                    const GridSpec& grid) {
    GrowthCertificate cert;
    cert.condition = cond;
    cert.subject = phi->token();
    cert.young_form = true;
    cert.grid = grid;
    const auto pts = grid.points();

    auto finite_at = [&](double x) {
        if (auto thr = phi->finite_threshold()) return x <= *thr;
        return true;
    };

    if (cond == GrowthCondition::delta2) {
        // Phi(2x) <= K Phi(x); an infinite tail fails by definition
        for (double K : constant_candidates()) {
            double worst = kInf;
            for (double x : pts) {
                if (!finite_at(2.0 * x)) { worst = -kInf; break; }
                worst = std::min(worst, K * (*phi)(x) - (*phi)(2.0 * x));
            }
            if (worst >= 0.0) {
                cert.pass = true;
                cert.K = K;
                cert.worst_margin = worst;
                return cert;
            }
            cert.worst_margin = worst;
            if (std::isinf(worst)) break;
        }
    } else if (cond == GrowthCondition::nabla2) {
        // Phi(x) <= (1/(2l)) Phi(l x)
        for (double ell : constant_candidates()) {
            const double worst = worst_margin_over(pts, [&](double x) {
                const double rhs = (*phi)(ell * x);
                if (std::isinf(rhs)) return kInf;
                return rhs / (2.0 * ell) - (*phi)(x);
            });
            if (worst >= 0.0) {
                cert.pass = true;
                cert.ell = ell;
                cert.worst_margin = worst;
                return cert;
            }
            cert.worst_margin = worst;
        }
    } else if (cond == GrowthCondition::delta_prime) {
        // Phi(x y) <= K Phi(x) Phi(y); pair grid subsampled for cost
        const auto sub = subsample(pts, 8);
        for (double K : constant_candidates()) {
            double worst = kInf;
            for (double x : sub) {
                for (double y : sub) {
                    if (!finite_at(x) || !finite_at(y) || !finite_at(x * y)) {
                        worst = -kInf;
                        break;
                    }
                    worst = std::min(worst, K * (*phi)(x) * (*phi)(y) - (*phi)(x * y));
                }
                if (std::isinf(worst) && worst < 0) break;
            }
            if (worst >= 0.0) {
                cert.pass = true;
                cert.K = K;
                cert.worst_margin = worst;
                return cert;
            }
            cert.worst_margin = worst;
            if (std::isinf(worst)) break;
        }
    } else {
        throw std::invalid_argument("class conditions apply to fundamental functions");
    }
    cert.pass = false;
    return cert;
}

TailGrowthReport tail_growth_bounds(const FundPtr& phi, const GrowthCertificate& cert,
                                    const GridSpec& grid) {
    if (!cert.pass) throw std::invalid_argument("tail_growth_bounds needs a passing certificate");
    TailGrowthReport rep;
    const auto x_pts = subsample(grid.points(), 4);
    std::vector<double> y_pts;
    for (double y : x_pts)
        if (y <= 1.0) y_pts.push_back(y);
    y_pts.push_back(1.0);

    if (cert.condition == GrowthCondition::delta2) {
        rep.epsilon = 1.0 / (cert.K - 1.0);
        rep.p = rep.epsilon;
        // phi(y x) <= 2 y^p phi(x), y <= 1
        double worst = kInf;
        for (double y : y_pts)
            for (double x : x_pts)
                worst = std::min(worst,
                                 2.0 * std::pow(y, rep.p) * (*phi)(x) - (*phi)(y * x));
        rep.worst_margin = worst;
        rep.pass = worst >= 0.0;
    } else if (cert.condition == GrowthCondition::nabla2) {
        if (!(cert.ell > 2.0))
            throw std::invalid_argument("nabla2 tail bound needs l > 2");
        rep.epsilon = 1.0 - 1.0 / (cert.ell - 1.0);
        rep.p = rep.epsilon;
        // phi(y x) >= (1/2) y^p phi(x), y <= 1, p >= epsilon
        double worst = kInf;
        for (double y : y_pts)
            for (double x : x_pts)
                worst = std::min(worst,
                                 (*phi)(y * x) - 0.5 * std::pow(y, rep.p) * (*phi)(x));
        rep.worst_margin = worst;
        rep.pass = worst >= 0.0;
    } else {
        throw std::invalid_argument("tail_growth_bounds needs a delta2 or nabla2 certificate");
    }
    return rep;
}

ZippinReport zippin_indices(const FundPtr& phi, const GridSpec& grid) {
    ZippinReport rep;
    const auto pts = grid.points();
    const auto s_pts = subsample(pts, 2);
    rep.samples.reserve(pts.size());
    for (double t : pts) {
        double m = 0.0;
        for (double s : s_pts) m = std::max(m, (*phi)(s * t) / (*phi)(s));
        rep.samples.emplace_back(t, m);
    }
    // secant slopes of ln M against ln t over the outermost decades
    auto slope_near = [&](double t_lo, double t_hi) {
        double a_t = 0, a_m = 0, b_t = 0, b_m = 0;
        bool have_a = false, have_b = false;
        for (const auto& [t, m] : rep.samples) {
            if (!have_a && t >= t_lo) { a_t = t; a_m = m; have_a = true; }
            if (t <= t_hi) { b_t = t; b_m = m; have_b = true; }
        }
        if (!have_a || !have_b || a_t == b_t) return 0.0;
        return (std::log(b_m) - std::log(a_m)) / (std::log(b_t) - std::log(a_t));
    };
    rep.beta_lower = slope_near(grid.lo, grid.lo * 10.0);
    rep.beta_upper = slope_near(grid.hi / 10.0, grid.hi);

    // submultiplicativity M(t1 t2) <= M(t1) M(t2) on coarse grid pairs
    auto m_of = [&](double t) {
        double m = 0.0;
        for (double s : s_pts) m = std::max(m, (*phi)(s * t) / (*phi)(s));
        return m;
    };
    const auto coarse = subsample(pts, 32);
    rep.submultiplicative = true;
    for (double t1 : coarse)
        for (double t2 : coarse) {
            if (t1 * t2 < grid.lo || t1 * t2 > grid.hi) continue;
            if (m_of(t1 * t2) > m_of(t1) * m_of(t2) * (1.0 + 1e-9)) {
                rep.submultiplicative = false;
                break;
            }
        }
    return rep;
}

}  // namespace ri
