#include "ri/checks.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ri/numeric.hpp"
#include "ri/young.hpp"

namespace ri {

nlohmann::json CheckRecord::to_json() const {
    nlohmann::json j{{"check", check_name}, {"anchor", anchor},   {"params", params},
                     {"lhs", lhs},          {"rhs", rhs},         {"margin", margin},
                     {"pass", pass}};
    if (!caveat.empty()) j["caveat"] = caveat;
    return j;
}

CheckRecord make_upper_check(std::string name, std::string anchor, double lhs, double rhs,
                             nlohmann::json params, double tol) {
    CheckRecord rec;
    rec.check_name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.params = std::move(params);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.margin = rhs - lhs;
    rec.pass = lhs <= rhs * (1.0 + tol);
    return rec;
}

WeakTypeEstimate weak_type_estimate(const OperatorHandle& op, const NormSpec& X,
                                    const FundPtr& phi_Y,
                                    const std::vector<AtomicFunction>& ensemble) {
    if (ensemble.empty()) throw std::invalid_argument("weak_type_estimate: empty ensemble");
    WeakTypeEstimate est;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const AtomicFunction& f = ensemble[i];
        const double nx = evaluate_norm(X, f);
        if (!(nx > 0.0)) throw std::invalid_argument("weak_type_estimate: zero X-norm member");
        const AtomicFunction tf = op(f);
        // the two evaluation routes of the target quasinorm must agree exactly
        const double route1 = mstar_quasinorm(*phi_Y, tf);
        const double route2 = mstar_distribution_form(*phi_Y, tf);
        if (route1 != route2)
            throw std::logic_error("weak_type_estimate: quasinorm route mismatch");
        const double ratio = route1 / nx;
        if (ratio > est.c_hat) {
            est.c_hat = ratio;
            est.witness = i;
        }
    }
    return est;
}

double group_weak_type_estimate(const GroupOperator& op, const NormSpec& X,
                                const FundPtr& phi_Y,
                                const std::vector<GroupFunction>& ensemble) {
    double c_hat = 0.0;
    for (const GroupFunction& g : ensemble) {
        const double nx = evaluate_norm(X, group_profile(g));
        if (!(nx > 0.0)) continue;
        c_hat = std::max(c_hat, mstar_quasinorm(*phi_Y, group_profile(op(g))) / nx);
    }
    return c_hat;
}

GroupFunction group_maximal_birkhoff(const GroupFunction& g, std::size_t n_max) {
    if (g.values.empty() || n_max == 0) return {};
    const long long len = static_cast<long long>(g.values.size());
    // prefix sums P[i] = sum of the first i values
    std::vector<double> prefix(g.values.size() + 1, 0.0);
    CompensatedSum acc;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        acc.add(g.values[i]);
        prefix[i + 1] = acc.value();
    }
    GroupFunction out;
    out.offset = g.offset - static_cast<long long>(n_max - 1);
    const long long out_len = len + static_cast<long long>(n_max) - 1;
    out.values.assign(static_cast<std::size_t>(out_len), 0.0);
    for (long long j = 0; j < out_len; ++j) {
        const long long t = out.offset + j - g.offset;  // relative start index
        double best = 0.0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            const long long a = std::clamp(t, 0LL, len);
            const long long b = std::clamp(t + static_cast<long long>(n), 0LL, len);
            const double s = prefix[static_cast<std::size_t>(b)] -
                             prefix[static_cast<std::size_t>(a)];
            best = std::max(best, std::abs(s) / static_cast<double>(n));
        }
        out.values[static_cast<std::size_t>(j)] = best;
    }
    return out;
}

namespace {

double subset_mass(const SpacePtr& space, const std::vector<std::size_t>& A) {
    CompensatedSum acc;
    for (std::size_t i : A) acc.add(space->mass(i));
    return acc.value();
}

}  // namespace

CheckRecord kolmogorov_forward(double c, double sigma, const std::vector<std::size_t>& A,
                               const AtomicFunction& Tf, double f_norm_X,
                               const FundPtr& phi_Y) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw std::invalid_argument("kolmogorov_forward: sigma must be in (0,1)");
    const double a_mass = subset_mass(Tf.space, A);
    CompensatedSum acc;
    for (std::size_t i : A)
        acc.add(Tf.space->mass(i) * std::pow(std::abs(Tf.values[i]), sigma));
    const double lhs = acc.value();
    const double assoc = a_mass > 0.0 ? a_mass / (*phi_Y)(a_mass) : 0.0;
    const double rhs = std::pow(c, sigma) / (1.0 - sigma) * std::pow(assoc, sigma) *
                       std::pow(a_mass, 1.0 - sigma) * std::pow(f_norm_X, sigma);
    return make_upper_check("kolmogorov-forward", "kol2", lhs, rhs,
                            {{"sigma", sigma}, {"c", c}, {"A_mass", a_mass}});
}

double kolmogorov_converse_bound(double c, double sigma) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw std::invalid_argument("kolmogorov_converse_bound: sigma must be in (0,1)");
    return c / std::pow(1.0 - sigma, 1.0 / sigma);
}

CheckRecord kolmogorov_converse_check(double c, double sigma, const AtomicFunction& Tf,
                                      double f_norm_X, const FundPtr& phi_Y) {
    const double bound = kolmogorov_converse_bound(c, sigma);
    const double lhs = mstar_quasinorm(*phi_Y, Tf);
    return make_upper_check("kolmogorov-converse", "kol2", lhs, bound * f_norm_X,
                            {{"sigma", sigma}, {"c", c}, {"bound", bound}});
}

namespace {

// theta * phi_A(s t) >= phi_B(s) phi_C(t) over a coarse grid, with the
// standard multiplicative slack
bool product_hypothesis_holds(const FundamentalFunction& phi_A,
                              const FundamentalFunction& phi_B,
                              const FundamentalFunction& phi_C, double theta) {
    const GridSpec coarse{1e-6, 1e6, 8};
    const auto pts = coarse.points();
    for (double s : pts)
        for (double t : pts)
            if (phi_B(s) * phi_C(t) > theta * phi_A(s * t) * (1.0 + kIneqTol)) return false;
    return true;
}

}  // namespace

CheckRecord oneil_product_check(int part, const YoungPtr& young_A, const YoungPtr& young_B,
                                const YoungPtr& young_C, double theta,
                                const ProductFunction& f, const std::vector<std::size_t>& E) {
    if (part < 1 || part > 3) throw std::invalid_argument("oneil_product_check: part in 1..3");
    const FundPtr phi_A = fundamental_from_young(young_A);
    const FundPtr phi_B = fundamental_from_young(young_B);
    const FundPtr phi_C = fundamental_from_young(young_C);
    if (!product_hypothesis_holds(*phi_A, *phi_B, *phi_C, theta))
        throw std::invalid_argument("oneil_product_check: hypothesis certification failed");
    if (part >= 2) {
        // phi*_B must vanish at 0 (checked at the small end of the grid)
        const double assoc_lo = 1e-6 / (*phi_B)(1e-6);
        const double assoc_one = 1.0 / (*phi_B)(1.0);
        if (!(assoc_lo <= 0.05 * assoc_one))
            throw std::invalid_argument("oneil_product_check: phi*_B does not vanish at 0");
    }

    const double e_mass = subset_mass(f.space1(), E);
    double lhs = 0.0;
    if (e_mass > 0.0) {
        CompensatedSum inner;
        for (std::size_t i : E) {
            const AtomicFunction cross = f.cross_section(i);
            double n = 0.0;
            if (part == 1)
                n = m_norm(*phi_B, cross);
            else if (part == 2)
                n = lambda_norm(*phi_B, cross).first;
            else
                n = luxemburg_norm(*young_B, cross);
            inner.add(f.space1()->mass(i) * n);
        }
        lhs = (*phi_C)(e_mass) / e_mass * inner.value();
    }

    const StepProfile prof = decreasing_rearrangement(f);
    double rhs = 0.0;
    std::string norm_label;
    if (part == 1) {
        rhs = 4.0 * std::exp(3.0) * theta * m_norm(*phi_A, prof);
        norm_label = "M";
    } else if (part == 2) {
        rhs = 6.0 * theta * lambda_norm(*phi_A, prof).first;
        norm_label = "Lambda";
    } else {
        rhs = theta * luxemburg_norm(*young_A, prof);
        norm_label = "Luxemburg";
    }
    return make_upper_check("oneil-part" + std::to_string(part),
                            "oneil-" + std::to_string(part), lhs, rhs,
                            {{"theta", theta},
                             {"E_mass", e_mass},
                             {"space", norm_label},
                             {"young_A", young_A->token()}});
}

namespace {

struct CalderonFields {
    SkewField pre;   // F over the window K U^{-1}
    SkewField post;  // F' after kernel application
    long long k_len;
};

CalderonFields build_calderon_fields(const Kernel& k, const Action& action,
                                     const AtomicFunction& f, long long k_len) {
    if (k_len < 1) throw std::invalid_argument("K interval must have length >= 1");
    const long long r = k.semilocal_radius();
    std::vector<long long> window;
    for (long long t = -r; t <= (k_len - 1) + r; ++t) window.push_back(t);
    CalderonFields out;
    out.pre = skew_field(f, action, window);
    out.post = apply_kernel_field(k, out.pre);
    out.k_len = k_len;
    return out;
}

}  // namespace

CheckRecord calderon_counting_check(const Kernel& k, const Action& action,
                                    const AtomicFunction& f, double lambda, long long k_len,
                                    double c, const NormSpec* X, const FundPtr& phi_Y) {
    const CalderonFields cf = build_calderon_fields(k, action, f, k_len);
    const std::size_t atoms = f.space->size();
    const std::size_t cols = cf.post.window.size();

    const long long col0 = cf.post.column_of(0);
    if (col0 < 0) throw std::logic_error("calderon_counting_check: origin not in window");
    CompensatedSum e_mass;
    for (std::size_t i = 0; i < atoms; ++i)
        if (std::abs(cf.post.at(i, static_cast<std::size_t>(col0))) > lambda)
            e_mass.add(f.space->mass(i));

    CompensatedSum ebar_mass;
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < atoms; ++i)
            if (std::abs(cf.post.at(i, j)) > lambda) ebar_mass.add(f.space->mass(i));

    const double lhs = static_cast<double>(k_len) * e_mass.value();
    const double rhs = ebar_mass.value();
    CheckRecord rec = make_upper_check("calderon-counting", "calderon-count", lhs, rhs,
                                       {{"lambda", lambda}, {"K_len", k_len}}, 0.0);

    if (c > 0.0 && X && phi_Y) {
        double worst = kInf;
        bool per_atom_pass = true;
        for (std::size_t i = 0; i < atoms; ++i) {
            double ebar_row = 0.0;
            for (std::size_t j = 0; j < cols; ++j)
                if (std::abs(cf.post.at(i, j)) > lambda) ebar_row += 1.0;
            if (ebar_row == 0.0) continue;
            const double l = (*phi_Y)(ebar_row);
            const double r = c / lambda * evaluate_norm(*X, group_profile(cf.pre.row(i)));
            worst = std::min(worst, r - l);
            if (l > r * (1.0 + kIneqTol)) per_atom_pass = false;
        }
        rec.params["per_atom_worst_margin"] = std::isfinite(worst) ? worst : 0.0;
        rec.params["c"] = c;
        rec.caveat = "c is the empirical group-side constant (a lower bound)";
        rec.pass = rec.pass && per_atom_pass;
    }
    return rec;
}

CheckRecord domination_profile_check(const Kernel& k, const Action& action,
                                     const AtomicFunction& f, long long k_len) {
    const CalderonFields cf = build_calderon_fields(k, action, f, k_len);
    const std::size_t atoms = f.space->size();
    const std::size_t cols = cf.post.window.size();

    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(atoms * cols);
    for (std::size_t i = 0; i < atoms; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            pairs.emplace_back(cf.post.at(i, j), f.space->mass(i));
    const StepProfile field_prof = rearrange_pairs(std::move(pairs));

    const long long col0 = cf.post.column_of(0);
    const StepProfile tf_prof =
        decreasing_rearrangement(cf.post.column_as_space_function(static_cast<std::size_t>(col0)));

    // merged breakpoint partition; checking at interval midpoints checks the
    // step functions everywhere
    std::set<double> cuts{0.0};
    for (const auto& st : field_prof.steps()) cuts.insert(st.cum);
    for (const auto& st : tf_prof.steps()) cuts.insert(st.cum * static_cast<double>(k_len));
    double worst = kInf;
    bool ok = true;
    double prev = 0.0;
    for (double b : cuts) {
        if (b <= prev) continue;
        const double mid = 0.5 * (prev + b);
        const double lhs = tf_prof.value_at(mid / static_cast<double>(k_len));
        const double rhs = field_prof.value_at(mid);
        worst = std::min(worst, rhs - lhs);
        if (rhs < lhs) ok = false;
        prev = b;
    }
    CheckRecord rec;
    rec.check_name = "domination-profile";
    rec.anchor = "k-dominance";
    rec.params = {{"K_len", k_len}};
    rec.lhs = 0.0;
    rec.rhs = std::isfinite(worst) ? worst : 0.0;
    rec.margin = rec.rhs;
    rec.pass = ok;
    return rec;
}

CheckRecord maximal_weak_type_bound_check(const MaximalWeakTypeConfig& cfg,
                                          const Action& action,
                                          const std::vector<std::size_t>& A) {
    const GridSpec coarse{cfg.grid.lo, cfg.grid.hi, 8};
    const auto pts = coarse.points();
    for (double s : pts)
        for (double t : pts) {
            if ((*cfg.phi_A)(t) * (*cfg.phi_X)(s) >
                (*cfg.phi_Y)(cfg.theta1 * s * t) * (1.0 + kIneqTol))
                throw std::invalid_argument("maximal bound: first hypothesis fails");
            if ((*cfg.phi_Z)(s * t) >
                cfg.theta2 * (*cfg.phi_A)(s) * (*cfg.phi_W)(t) * (1.0 + kIneqTol))
                throw std::invalid_argument("maximal bound: second hypothesis fails");
        }
    if (!certify_condition(cfg.phi_Z, GrowthCondition::u_class, cfg.grid).pass)
        throw std::invalid_argument("maximal bound: phi_Z not u-class certified");
    if (!((*cfg.phi_A)(cfg.grid.lo) <= 1e-2 && (*cfg.phi_A)(cfg.grid.hi) >= 1e2))
        throw std::invalid_argument("maximal bound: phi_A limit conditions fail");

    // indicator of A transferred through the Birkhoff family
    std::vector<double> chi(action.space()->size(), 0.0);
    for (std::size_t i : A) chi[i] = 1.0;
    const AtomicFunction chi_A(action.space(), chi);
    const auto avgs = birkhoff_averages(action, chi_A, cfg.n_max);
    std::vector<double> maximal(chi.size(), 0.0);
    for (const auto& row : avgs)
        for (std::size_t i = 0; i < maximal.size(); ++i)
            maximal[i] = std::max(maximal[i], std::abs(row[i]));
    const double lhs =
        mstar_quasinorm(*cfg.phi_Z, AtomicFunction(action.space(), std::move(maximal)));

    // empirical group-side constant: the supplied ensemble plus the field
    // rows of chi_A over a long window, which are the functions the counting
    // argument applies the group operator to
    std::vector<GroupFunction> ensemble = cfg.group_ensemble;
    {
        const long long r = static_cast<long long>(cfg.n_max) - 1;
        const long long k_len = 8 * static_cast<long long>(cfg.n_max);
        std::vector<long long> window;
        for (long long t = -r; t <= (k_len - 1) + r; ++t) window.push_back(t);
        const SkewField field = skew_field(chi_A, action, window);
        for (std::size_t i = 0; i < chi_A.size(); ++i) {
            GroupFunction row = field.row(i);
            bool nonzero = false;
            for (double v : row.values) nonzero |= (v != 0.0);
            if (nonzero) ensemble.push_back(std::move(row));
        }
    }
    const double c = group_weak_type_estimate(
        [&](const GroupFunction& g) { return group_maximal_birkhoff(g, cfg.n_max); },
        cfg.group_X, cfg.phi_Y, ensemble);

    const double a_mass = subset_mass(action.space(), A);
    const double rhs = (cfg.theta1 + 1.0) * cfg.theta2 * c *
                       (a_mass > 0.0 ? (*cfg.phi_W)(a_mass) : 0.0);
    CheckRecord rec = make_upper_check("maximal-weak-type", "endcal9-bound", lhs, rhs,
                                       {{"theta1", cfg.theta1},
                                        {"theta2", cfg.theta2},
                                        {"c", c},
                                        {"A_mass", a_mass},
                                        {"N", cfg.n_max}});
    rec.caveat = "c is the empirical group-side constant (a lower bound)";
    return rec;
}

CheckRecord strong_type_factorization_check(const StrongTypeConfig& cfg, const Action& action,
                                            const AtomicFunction& f) {
    // sup_n |k_n(s)| must factor as l0(s) l1(s) on the union of supports
    std::set<long long> supp;
    for (const Kernel& k : cfg.kernels)
        for (long long s : k.support) supp.insert(s);
    for (long long s : supp) {
        double sup_k = 0.0;
        for (const Kernel& k : cfg.kernels) sup_k = std::max(sup_k, std::abs(k.weight_at(s)));
        const double prod = cfg.ell0.at(s) * cfg.ell1.at(s);
        if (!nearly_equal(sup_k, prod, 1e-12))
            throw std::invalid_argument("strong type: kernel factorization mismatch");
    }
    const FundPtr phi_A = fundamental_from_young(cfg.phi_A);
    const FundPtr phi_B = fundamental_from_young(cfg.phi_B);
    const FundPtr phi_C = fundamental_from_young(cfg.phi_C);
    const FundPtr phi_D = fundamental_from_young(cfg.phi_D);
    const FundPtr phi_E = fundamental_from_young(cfg.phi_E);
    const FundPtr assoc_B = associate_fundamental(phi_B);
    const GridSpec coarse{1e-6, 1e6, 8};
    const auto pts = coarse.points();
    for (double s : pts)
        for (double t : pts) {
            if ((*phi_C)(t) * (*assoc_B)(s) > cfg.theta1 * (*phi_A)(s * t) * (1.0 + kIneqTol))
                throw std::invalid_argument("strong type: first hypothesis fails");
            if ((*phi_A)(s * t) > cfg.theta2 * (*phi_D)(s) * (*phi_E)(t) * (1.0 + kIneqTol))
                throw std::invalid_argument("strong type: second hypothesis fails");
        }

    const AtomicFunction sup_tf =
        maximal_transfer(cfg.kernels, action, f, cfg.kernels.size());
    const double lhs = luxemburg_norm(*cfg.phi_C, sup_tf);
    const double rhs = cfg.theta1 * cfg.theta2 *
                       luxemburg_norm(*cfg.phi_B, group_profile(cfg.ell1)) *
                       luxemburg_norm(*cfg.phi_E, group_profile(cfg.ell0)) *
                       luxemburg_norm(*cfg.phi_D, f);
    return make_upper_check("strong-type-factorization", "transfer-eg", lhs, rhs,
                            {{"theta1", cfg.theta1},
                             {"theta2", cfg.theta2},
                             {"kernels", cfg.kernels.size()}});
}

OscillationReport oscillation_convergence_check(const Action& action, const AtomicFunction& f,
                                                std::size_t m_window, std::size_t tail_n) {
    if (m_window >= tail_n)
        throw std::invalid_argument("oscillation check: m_window must be < tail_n");
    const auto avgs = birkhoff_averages(action, f, tail_n);
    const std::size_t atoms = f.size();

    std::vector<double> maximal(atoms, 0.0);
    for (const auto& row : avgs)
        for (std::size_t i = 0; i < atoms; ++i)
            maximal[i] = std::max(maximal[i], std::abs(row[i]));

    std::vector<double> hi(atoms, -kInf), lo(atoms, kInf);
    for (std::size_t n = m_window; n <= tail_n; ++n)
        for (std::size_t i = 0; i < atoms; ++i) {
            hi[i] = std::max(hi[i], avgs[n - 1][i]);
            lo[i] = std::min(lo[i], avgs[n - 1][i]);
        }

    OscillationReport rep;
    rep.oscillation.resize(atoms);
    bool pointwise = true;
    double worst = kInf;
    for (std::size_t i = 0; i < atoms; ++i) {
        rep.oscillation[i] = hi[i] - lo[i];
        rep.sup_oscillation = std::max(rep.sup_oscillation, rep.oscillation[i]);
        worst = std::min(worst, 2.0 * maximal[i] - rep.oscillation[i]);
        if (rep.oscillation[i] > 2.0 * maximal[i]) pointwise = false;
    }
    rep.record.check_name = "oscillation-convergence";
    rep.record.anchor = "oscillation-2T";
    rep.record.params = {{"m_window", m_window}, {"tail_n", tail_n}};
    rep.record.lhs = rep.sup_oscillation;
    rep.record.rhs = std::isfinite(worst) ? worst : 0.0;
    rep.record.margin = rep.record.rhs;
    rep.record.pass = pointwise;
    return rep;
}

std::vector<CheckRecord> statphys_suite(const GridSpec& grid) {
    std::vector<CheckRecord> out;

    // (a) t^p / (2(m+1))! <= cosh t - 1 with 2m <= p < 2(m+1), on [0, 50]
    const YoungPtr cosh_y = parse_young("coshm1");
    for (double p : {2.0, 3.0, 4.0, 5.0}) {
        const int m = static_cast<int>(p / 2.0);
        double fact = 1.0;
        for (int j = 2; j <= 2 * (m + 1); ++j) fact *= j;
        double worst = kInf;
        for (int i = 1; i <= 1000; ++i) {
            const double t = 50.0 * i / 1000.0;
            worst = std::min(worst, ((*cosh_y)(t)-std::pow(t, p) / fact) / (*cosh_y)(t));
        }
        CheckRecord rec;
        rec.check_name = "power-under-cosh-p" + std::to_string(static_cast<int>(p));
        rec.anchor = "statphys-cosh";
        rec.params = {{"p", p}, {"factorial", fact}};
        rec.lhs = std::pow(1.0, p) / fact;  // spot value at t = 1
        rec.rhs = (*cosh_y)(1.0);
        rec.margin = worst;
        rec.pass = worst >= 0.0;
        out.push_back(rec);
    }

    // (b) t log(t+1) <= K t^p: global K from a grid scan
    const YoungPtr llogl = parse_young("llogl");
    double K_p2 = 0.0;
    for (double p : {1.1, 1.5, 2.0}) {
        double K = 0.0;
        for (double t : grid.points()) K = std::max(K, (*llogl)(t) / std::pow(t, p));
        K *= 1.0 + 1e-12;
        double worst = kInf;
        for (double t : grid.points())
            worst = std::min(worst, K * std::pow(t, p) - (*llogl)(t));
        CheckRecord rec = make_upper_check("llogl-under-power-p" + std::to_string(p),
                                           "statphys-K-scan", 0.0, worst,
                                           {{"p", p}, {"K", K}}, 0.0);
        rec.pass = worst >= 0.0;
        rec.margin = worst;
        out.push_back(rec);
        if (p == 2.0) K_p2 = K;
    }

    // (c) equivalence scans Phi1(a t) <= Phi2(t) <= Phi1(b t)
    const auto equivalence = [&](const YoungPtr& y1, const YoungPtr& y2,
                                 const std::string& label) {
        double a = 2.0, b = 0.5;
        bool a_ok = false, b_ok = false;
        for (int tries = 0; tries < 16 && !a_ok; ++tries) {
            a /= 2.0;
            a_ok = true;
            for (double t : grid.points())
                if ((*y1)(a * t) > (*y2)(t) * (1.0 + kIneqTol)) { a_ok = false; break; }
        }
        for (int tries = 0; tries < 16 && !b_ok; ++tries) {
            b *= 2.0;
            b_ok = true;
            for (double t : grid.points())
                if ((*y2)(t) > (*y1)(b * t) * (1.0 + kIneqTol)) { b_ok = false; break; }
        }
        CheckRecord rec;
        rec.check_name = "young-equivalence-" + label;
        rec.anchor = "statphys-equivalence";
        rec.params = {{"a", a}, {"b", b}};
        rec.lhs = a;
        rec.rhs = b;
        rec.margin = b - a;
        rec.pass = a_ok && b_ok;
        return rec;
    };
    out.push_back(equivalence(parse_young("coshm1"), parse_young("expm"), "coshm1-expm"));
    out.push_back(equivalence(parse_young("llogl"), parse_young("entropy"), "llogl-entropy"));

    // delta_2 for t log(t+1), Young form
    {
        const GrowthCertificate cert = certify_condition(llogl, GrowthCondition::delta2, grid);
        CheckRecord rec;
        rec.check_name = "llogl-delta2";
        rec.anchor = "statphys-delta2";
        rec.params = {{"K", cert.K}};
        rec.lhs = 0.0;
        rec.rhs = cert.worst_margin;
        rec.margin = cert.worst_margin;
        rec.pass = cert.pass;
        out.push_back(rec);
    }

    // (d) the maximal weak-type bound with the scaled-power / llogl pairing
    {
        const double p = 2.0;
        const double sqrtK = std::sqrt(K_p2);
        const YoungPtr scaled = std::make_shared<YoungFunction>(
            "scaled-power", [sqrtK, p](double t) { return sqrtK * std::pow(t, p); });
        MaximalWeakTypeConfig cfg;
        cfg.phi_A = cfg.phi_W = cfg.phi_Y = fundamental_from_young(scaled);
        cfg.phi_X = cfg.phi_Z = fundamental_from_young(llogl);
        cfg.theta2 = 1.0 + 1e-9;
        // smallest theta1 (near 1/sqrt(K)) passing the first hypothesis
        cfg.theta1 = 1.0 / sqrtK;
        const GridSpec coarse{1e-6, 1e6, 8};
        while (true) {
            bool ok = true;
            for (double s : coarse.points()) {
                for (double t : coarse.points())
                    if ((*cfg.phi_A)(t) * (*cfg.phi_X)(s) >
                        (*cfg.phi_Y)(cfg.theta1 * s * t) * (1.0 + kIneqTol)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) break;
            cfg.theta1 *= std::pow(2.0, 1.0 / 16.0);
        }
        cfg.group_X = NormSpec::with_young(NormKind::luxemburg, llogl);
        cfg.group_ensemble = make_group_ensemble(kDefaultSeed, 8, 128);
        cfg.n_max = 16;
        const Action action = Action::cycle(64);
        std::vector<std::size_t> A;
        for (std::size_t i = 0; i < 8; ++i) A.push_back(i * 7 % 64);
        CheckRecord rec = maximal_weak_type_bound_check(cfg, action, A);
        rec.check_name = "llogl-maximal-weak-type";
        rec.anchor = "statphys-endcal9";
        out.push_back(rec);
    }

    // (e) oscillation of Birkhoff averages of an llogl-normalized function
    {
        const Action action = Action::cycle(64);
        const auto ensemble = make_ensemble_on(action.space(), kDefaultSeed ^ 0x51A7, 4);
        const AtomicFunction& base = ensemble[4];  // a uniform-family member
        const double n = luxemburg_norm(*llogl, base);
        std::vector<double> scaled(base.values);
        for (double& v : scaled) v /= n;
        const OscillationReport rep = oscillation_convergence_check(
            action, AtomicFunction(action.space(), std::move(scaled)), 512, 1024);
        CheckRecord rec = rep.record;
        rec.check_name = "llogl-oscillation";
        rec.anchor = "statphys-birkhoff";
        out.push_back(rec);
    }

    return out;
}

}  // namespace ri
