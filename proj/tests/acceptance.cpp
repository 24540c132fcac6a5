// Acceptance gate: one line per criterion, nonzero exit iff any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "ri/checks.hpp"
#include "ri/numeric.hpp"
#include "ri/suites.hpp"

using namespace ri;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void begin() { t0 = std::chrono::steady_clock::now(); }

void report(int id, bool pass, const char* what) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%.2fs)\n", id, pass ? "PASS" : "FAIL", what, secs);
    if (!pass) ++failures;
}

double pnorm(const AtomicFunction& f, double p) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc.add(f.space->mass(i) * std::pow(std::abs(f.values[i]), p));
    return std::pow(acc.value(), 1.0 / p);
}

// 1. Galois relation, exact, 1000 seeded functions
void criterion1() {
    begin();
    bool pass = true;
    const auto fns = make_random_functions(kDefaultSeed, 1000, 256);
    for (const auto& f : fns) {
        const StepProfile p = decreasing_rearrangement(f);
        const auto& steps = p.steps();
        const std::size_t k = steps.size();
        std::vector<double> dist(k);
        for (std::size_t i = 0; i < k; ++i)
            dist[i] = distribution_function(f, steps[i].value);
        // f*(cum_j) is the value of the next step (0 past the end)
        for (std::size_t j = 0; j < k && pass; ++j) {
            const double s = steps[j].cum;
            const double fstar = j + 1 < k ? steps[j + 1].value : 0.0;
            for (std::size_t i = 0; i < k; ++i)
                if ((fstar > steps[i].value) != (dist[i] > s)) {
                    pass = false;
                    break;
                }
        }
        // and at s = 0: f*(0) = top value
        for (std::size_t i = 0; i < k && pass; ++i)
            if ((steps[0].value > steps[i].value) != (dist[i] > 0.0)) pass = false;
        if (!pass) break;
    }
    report(1, pass, "Galois relation exact on 1000 random functions");
}

// 2. the two quasinorm formulas agree exactly
void criterion2() {
    begin();
    bool pass = true;
    const auto ensemble = make_ensemble();
    for (const std::string tok : {"power:0.5", "young:llogl", "l1capinf"}) {
        const FundPtr phi = parse_fundamental(tok);
        for (const auto& f : ensemble)
            pass = pass && mstar_quasinorm(*phi, f) == mstar_distribution_form(*phi, f);
    }
    report(2, pass, "two-formula quasinorm equality, exact, three gauges");
}

// 3. Luxemburg vs closed-form p-norms
void criterion3() {
    begin();
    bool pass = true;
    const auto ensemble = make_ensemble();
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const YoungPtr young = parse_young("power:" + std::to_string(p));
        for (const auto& f : ensemble) {
            const double ref = pnorm(f, p);
            const double lux = luxemburg_norm(*young, f);
            if (ref == 0.0)
                pass = pass && lux == 0.0;
            else
                pass = pass && std::abs(lux - ref) <= 1e-10 * ref;
        }
    }
    report(3, pass, "Luxemburg matches p-norms within 1e-10 relative");
}

// 4. Orlicz sandwich
void criterion4() {
    begin();
    bool pass = true;
    const auto ensemble = make_ensemble();
    for (const std::string tok : {"power:2", "llogl", "expm"}) {
        const YoungPtr young = parse_young(tok);
        for (const auto& f : ensemble) {
            const double lux = luxemburg_norm(*young, f);
            const auto [lo, hi] = orlicz_norm_bounds(*young, f);
            pass = pass && lo <= 2.0 * lux * (1.0 + 1e-9) && lux <= hi * (1.0 + 1e-9);
        }
    }
    report(4, pass, "Orlicz bounds sandwich the Luxemburg norm");
}

// 5. phi phi* = t on 12 decades
void criterion5() {
    begin();
    bool pass = true;
    for (const std::string tok : {"power:0.5", "power:1", "young:llogl", "young:coshm1",
                                  "young:expm", "young:entropy", "l1capinf"}) {
        const FundPtr phi = parse_fundamental(tok);
        const FundPtr assoc = associate_fundamental(phi);
        for (double t : GridSpec{1e-6, 1e6, 64}.points())
            pass = pass && std::abs((*phi)(t) * (*assoc)(t)-t) <= 1e-9 * t;
    }
    report(5, pass, "phi phi* = t within 1e-9 relative over 12 decades");
}

// 6. tail growth bound for the square root
void criterion6() {
    begin();
    const FundPtr root = parse_fundamental("power:0.5");
    const GrowthCertificate cert = certify_condition(root, GrowthCondition::delta2);
    bool pass = cert.pass && std::abs(cert.K - 4.0) <= 1e-9;
    const TailGrowthReport tail = tail_growth_bounds(root, cert);
    pass = pass && tail.pass && std::abs(tail.epsilon - 1.0 / 3.0) <= 1e-9;
    report(6, pass, "phi(yx) <= 2 y^(1/3) phi(x) certified for sqrt with K=4");
}

// 7. skew-tensor equimeasurability
void criterion7() {
    begin();
    bool pass = true;
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(rng() % 61);
        const Action action = Action::cycle(n);
        std::vector<double> values(n);
        for (double& v : values) v = unif(rng);
        const AtomicFunction g(action.space(), std::move(values));
        Kernel f;
        const long long half = 1 + static_cast<long long>(rng() % 31);
        for (long long s = -half; s <= half; ++s) {
            f.support.push_back(s);
            f.weights.push_back(unif(rng));
        }
        pass = pass && decreasing_rearrangement(skew_tensor(g, f, action)) ==
                           decreasing_rearrangement(plain_tensor(g, f));
    }
    report(7, pass, "skew and plain tensors equimeasurable, 100 seeded triples");
}

// 8. Calderon counting sweep, exact
void criterion8() {
    begin();
    bool pass = true;
    for (std::size_t N : {std::size_t{8}, std::size_t{16}, std::size_t{64}}) {
        const Action action = Action::cycle(N);
        std::vector<double> values(N);
        std::mt19937_64 rng(kDefaultSeed + N);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (double& v : values) v = unif(rng);
        const AtomicFunction f(action.space(), std::move(values));

        for (const std::string ktok : {"birkhoff:2", "birkhoff:4"}) {
            const Kernel k = parse_kernel(ktok);
            const long long r = k.semilocal_radius();
            for (long long k_len = 1; k_len <= static_cast<long long>(N); ++k_len) {
                std::vector<long long> window;
                for (long long t = -r; t <= (k_len - 1) + r; ++t) window.push_back(t);
                const SkewField field = apply_kernel_field(k, skew_field(f, action, window));
                const long long col0 = field.column_of(0);

                // integer counts suffice: the cycle is uniform
                std::vector<double> all, col;
                all.reserve(field.values.size());
                for (double v : field.values) all.push_back(std::abs(v));
                for (std::size_t i = 0; i < N; ++i)
                    col.push_back(std::abs(field.at(i, static_cast<std::size_t>(col0))));
                std::sort(all.begin(), all.end());
                std::sort(col.begin(), col.end());
                std::vector<double> lambdas = all;
                lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
                for (double lam : lambdas) {
                    const auto above = [lam](const std::vector<double>& xs) {
                        return xs.end() - std::upper_bound(xs.begin(), xs.end(), lam);
                    };
                    if (k_len * above(col) > above(all)) pass = false;
                }
            }
        }

        // the library check agrees, and delta gives equality
        const Kernel d0 = parse_kernel("delta:0");
        for (double lam : {0.1, 0.5, 0.9}) {
            const CheckRecord rec = calderon_counting_check(d0, action, f, lam, 4);
            pass = pass && rec.pass && rec.margin == 0.0;
            pass = pass &&
                   calderon_counting_check(parse_kernel("birkhoff:4"), action, f, lam, 8).pass;
        }
    }
    report(8, pass, "counting bound exact over all K-lengths and levels; delta equality");
}

// 9. Kolmogorov sweep with the empirical constant
void criterion9() {
    begin();
    bool pass = true;
    const Action action = Action::cycle(64);
    const auto ensemble = make_ensemble_on(action.space(), kDefaultSeed, 32);
    const NormSpec X = NormSpec::with_young(NormKind::luxemburg, parse_young("power:1"));
    const FundPtr phi_Y = parse_fundamental("power:1");
    const OperatorHandle op = [&](const AtomicFunction& f) {
        const auto avgs = birkhoff_averages(action, f, 16);
        std::vector<double> out(f.size(), 0.0);
        for (const auto& row : avgs)
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = std::max(out[i], std::abs(row[i]));
        return AtomicFunction(f.space, std::move(out));
    };
    const WeakTypeEstimate est = weak_type_estimate(op, X, phi_Y, ensemble);

    std::vector<AtomicFunction> images;
    std::vector<double> norms;
    for (const auto& f : ensemble) {
        images.push_back(op(f));
        norms.push_back(evaluate_norm(X, f));
    }
    for (int si = 1; si <= 9; ++si) {
        const double sigma = si / 10.0;
        for (std::size_t a_size = 1; a_size <= 64; ++a_size) {
            std::vector<std::size_t> A(a_size);
            for (std::size_t i = 0; i < a_size; ++i) A[i] = i;
            for (std::size_t m = 0; m < images.size(); m += 7)
                pass = pass &&
                       kolmogorov_forward(est.c_hat, sigma, A, images[m], norms[m], phi_Y).pass;
        }
    }
    pass = pass && kolmogorov_converse_bound(est.c_hat, 0.5) == 4.0 * est.c_hat;
    for (std::size_t m = 0; m < images.size(); ++m)
        pass = pass &&
               kolmogorov_converse_check(est.c_hat, 0.5, images[m], norms[m], phi_Y).pass;
    report(9, pass, "Kolmogorov forward sweep and sigma=1/2 converse (multiplier 4)");
}

// 10. O'Neil part 3, matching square roots
void criterion10() {
    begin();
    bool pass = true;
    const YoungPtr young = parse_young("power:2");
    std::mt19937_64 rng(kDefaultSeed ^ 0x0E11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t n : {std::size_t{8}, std::size_t{16}}) {
        const SpacePtr s1 = AtomicMeasureSpace::uniform(n, 1.0 / static_cast<double>(n));
        const SpacePtr s2 = AtomicMeasureSpace::uniform(n, 1.0 / static_cast<double>(n));
        std::vector<std::vector<double>> members;
        members.emplace_back(n * n, 1.0);  // constant
        std::vector<double> rect(n * n, 0.0);
        for (std::size_t i = 0; i < n / 2; ++i)
            for (std::size_t j = 0; j < n / 2; ++j) rect[i * n + j] = 1.0;
        members.push_back(std::move(rect));
        for (int extra = 0; extra < 6; ++extra) {
            std::vector<double> v(n * n);
            for (double& x : v) x = unif(rng);
            members.push_back(std::move(v));
        }
        for (std::size_t e_size : {n, n / 2, std::size_t{1}}) {
            std::vector<std::size_t> E(e_size);
            for (std::size_t i = 0; i < e_size; ++i) E[i] = i;
            for (const auto& v : members)
                pass = pass &&
                       oneil_product_check(3, young, young, young, 1.0,
                                           ProductFunction(s1, s2, v), E)
                           .pass;
        }
    }
    report(10, pass, "O'Neil part 3 holds with theta=1 on 8x8 and 16x16 products");
}

// 11. maximal weak-type bound, square-root instantiation
void criterion11() {
    begin();
    bool pass = true;
    const Action action = Action::cycle(64);
    MaximalWeakTypeConfig cfg;
    cfg.phi_A = cfg.phi_W = cfg.phi_X = cfg.phi_Y = cfg.phi_Z = parse_fundamental("power:0.5");
    cfg.group_X = NormSpec::with_young(NormKind::luxemburg, parse_young("power:2"));
    cfg.group_ensemble = make_group_ensemble(kDefaultSeed, 8, 128);
    cfg.n_max = 64;
    double min_margin = kInf;
    std::mt19937_64 rng(kDefaultSeed ^ 0xAAAA);
    for (std::size_t a_size = 1; a_size <= 64; ++a_size) {
        std::vector<std::size_t> all(64);
        for (std::size_t i = 0; i < 64; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(a_size);
        const CheckRecord rec = maximal_weak_type_bound_check(cfg, action, all);
        pass = pass && rec.pass;
        min_margin = std::min(min_margin, rec.margin);
    }
    std::printf("              min margin over |A| sweep: %.6g\n", min_margin);
    report(11, pass, "maximal weak-type bound, sqrt instantiation, all |A| on a 64-cycle");
}

// 12. oscillation decay and the pointwise 2T bound
void criterion12() {
    begin();
    bool pass = true;
    const Action action = Action::cycle(64);
    const auto ensemble = make_ensemble_on(action.space(), kDefaultSeed, 32);
    for (const auto& f : ensemble) {
        double lo = f.values[0], hi = f.values[0];
        for (double v : f.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const OscillationReport rep = oscillation_convergence_check(action, f, 1024, 2048);
        pass = pass && rep.record.pass;  // exact two-sided comparison
        pass = pass && rep.sup_oscillation <= 8.0 * (hi - lo) / 1024.0;
    }
    report(12, pass, "oscillation <= 8 range/1024 at tail 2048 and <= 2 T# exactly");
}

// 13. the model-inequality suite
void criterion13() {
    begin();
    const auto records = statphys_suite({});
    bool pass = !records.empty();
    bool cosh_ok = false, equiv_a = false, equiv_b = false, delta2 = false, maximal = false;
    for (const auto& rec : records) {
        pass = pass && rec.pass;
        if (rec.check_name == "power-under-cosh-p3")
            cosh_ok = rec.pass && std::abs(rec.lhs - 1.0 / 24.0) < 1e-12 &&
                      std::abs(rec.rhs - (std::cosh(1.0) - 1.0)) < 1e-12;
        if (rec.check_name == "young-equivalence-coshm1-expm") equiv_a = rec.pass;
        if (rec.check_name == "young-equivalence-llogl-entropy") equiv_b = rec.pass;
        if (rec.check_name == "llogl-delta2") delta2 = rec.pass;
        if (rec.check_name == "llogl-maximal-weak-type") maximal = rec.pass;
    }
    pass = pass && cosh_ok && equiv_a && equiv_b && delta2 && maximal;
    report(13, pass, "model suite: cosh bound, equivalences, doubling, maximal bound");
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 13 criteria passed (%.1fs total)\n", 13 - failures, total);
    return failures == 0 ? 0 : 1;
}
