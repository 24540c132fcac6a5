#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ri/io.hpp"
#include "ri/norms.hpp"
#include "ri/suites.hpp"

namespace {

constexpr const char* kYoungTokens =
    "Young tokens: power:p (t^p, p>=1), llogl (t*log(t+1)), coshm1 (cosh t - 1), "
    "expm (e^t - t - 1), entropy ((t+1)log(t+1) - t), l1capinf (t capped at 1, then +inf)";
constexpr const char* kFundamentalTokens =
    "Fundamental tokens: power:a (t^a, 0<a<=1), young:<young-token>, or a bare Young token";
constexpr const char* kKernelTokens =
    "Kernel tokens: delta:a, uniform:a..b, geometric:q,n, birkhoff:n "
    "((1/n) on {-(n-1)..0}; the transferred operator is the forward n-average)";

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << '\n';
    }
}

int run_verify(const std::string& suite, const std::string& config_path,
               const std::string& out_path, std::uint64_t seed, int jobs, bool seed_set,
               bool jobs_set) {
    if (!config_path.empty()) {
        nlohmann::json cfg;
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("config: cannot open " + config_path);
        in >> cfg;
        if (cfg.contains("seed")) {
            if (!cfg.at("seed").is_number_unsigned() && !cfg.at("seed").is_number_integer())
                throw std::runtime_error("config field 'seed': must be an integer");
            if (!seed_set) seed = cfg.at("seed").get<std::uint64_t>();
        }
        if (cfg.contains("jobs")) {
            if (!cfg.at("jobs").is_number_integer())
                throw std::runtime_error("config field 'jobs': must be an integer");
            if (!jobs_set) jobs = cfg.at("jobs").get<int>();
        }
    }
    const auto records = ri::run_suite(suite, seed, jobs);
    bool all_pass = true;
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        os = &file;
    }
    for (const auto& rec : records) {
        *os << rec.to_json().dump() << '\n';
        all_pass = all_pass && rec.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribfs: rearrangements, gauge norms, transfer operators, and "
                 "inequality verification on atomic measure spaces"};
    app.footer(std::string(kYoungTokens) + "\n" + kFundamentalTokens + "\n" + kKernelTokens);
    app.require_subcommand(1);

    std::string input, out_path, system_path, config_path;
    std::string kind = "luxemburg", young_tok, fund_tok, kernel_tok, suite = "all";
    std::uint64_t seed = 0x5EED;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    auto* rearrange = app.add_subcommand("rearrange", "Decreasing rearrangement as JSON");
    rearrange->add_option("--input", input, "function CSV (atom,mass,value)")->required();
    rearrange->add_option("--out", out_path, "output JSON path (default stdout)");

    auto* norm = app.add_subcommand(
        "norm", "Evaluate a gauge norm; emits JSON {kind, value, lower, upper}");
    norm->add_option("--input", input, "function CSV")->required();
    norm->add_option("--kind", kind,
                     "luxemburg | orlicz | m | lambda | mstar (default luxemburg)");
    norm->add_option("--young", young_tok, kYoungTokens);
    norm->add_option("--fundamental", fund_tok, kFundamentalTokens);
    norm->add_option("--out", out_path, "output JSON path (default stdout)");

    auto* indices = app.add_subcommand(
        "indices", "Growth certificates and dilation indices of a fundamental function");
    indices->add_option("--fundamental", fund_tok, kFundamentalTokens)->required();
    indices->add_option("--out", out_path, "output JSON path (default stdout)");

    auto* transfer = app.add_subcommand("transfer", "Apply the transferred operator T#");
    transfer->add_option("--system", system_path,
                          "system JSON {space:{atoms,masses}, group, generator}")
        ->required();
    transfer->add_option("--kernel", kernel_tok, kKernelTokens)->required();
    transfer->add_option("--input", input, "function CSV")->required();
    transfer->add_option("--out", out_path, "output CSV path")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite, JSONL report");
    verify->add_option("--suite", suite,
                       "norms | growth | oneil | kolmogorov | transfer | maximal | "
                       "statphys | all (default all)");
    auto* seed_opt = verify->add_option("--seed", seed, "ensemble seed (default 0x5EED)");
    auto* jobs_opt = verify->add_option("--jobs", jobs, "parallel jobs (default: cores)");
    verify->add_option("--config", config_path, "optional config JSON {seed, jobs}");
    verify->add_option("--out", out_path, "report JSONL path (default stdout)");

    auto* statphys = app.add_subcommand("statphys", "Run only the model-inequality suite");
    statphys->add_option("--out", out_path, "report JSONL path (default stdout)");
    auto* sp_seed_opt = statphys->add_option("--seed", seed, "ensemble seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rearrange->parsed()) {
            emit(ri::profile_to_json(ri::decreasing_rearrangement(ri::read_function_csv(input))),
                 out_path);
            return 0;
        }
        if (norm->parsed()) {
            const ri::AtomicFunction f = ri::read_function_csv(input);
            nlohmann::json j{{"kind", kind}};
            if (kind == "luxemburg" || kind == "orlicz") {
                if (young_tok.empty()) throw std::runtime_error("--young: required for " + kind);
                const ri::YoungPtr y = ri::parse_young(young_tok);
                if (kind == "luxemburg") {
                    j["value"] = ri::luxemburg_norm(*y, f);
                } else {
                    const auto [lo, hi] = ri::orlicz_norm_bounds(*y, f);
                    j["lower"] = lo;
                    j["upper"] = hi;
                    j["value"] = ri::luxemburg_norm(*y, f);
                }
            } else if (kind == "m" || kind == "lambda" || kind == "mstar") {
                if (fund_tok.empty())
                    throw std::runtime_error("--fundamental: required for " + kind);
                const ri::FundPtr phi = ri::parse_fundamental(fund_tok);
                if (kind == "m") {
                    j["value"] = ri::m_norm(*phi, f);
                } else if (kind == "lambda") {
                    const auto [primary, dual] = ri::lambda_norm(*phi, f);
                    j["value"] = primary;
                    j["lower"] = dual;
                } else {
                    j["value"] = ri::mstar_quasinorm(*phi, f);
                    j["distribution_form"] = ri::mstar_distribution_form(*phi, f);
                }
            } else {
                throw std::runtime_error("--kind: unknown norm kind " + kind);
            }
            emit(j, out_path);
            return 0;
        }
        if (indices->parsed()) {
            const ri::FundPtr phi = ri::parse_fundamental(fund_tok);
            nlohmann::json certs = nlohmann::json::array();
            for (auto cond : {ri::GrowthCondition::delta2, ri::GrowthCondition::nabla2,
                              ri::GrowthCondition::u_class, ri::GrowthCondition::l_class})
                certs.push_back(ri::certificate_to_json(ri::certify_condition(phi, cond)));
            emit({{"fundamental", fund_tok},
                  {"certificates", certs},
                  {"zippin", ri::zippin_to_json(ri::zippin_indices(phi))}},
                 out_path);
            return 0;
        }
        if (transfer->parsed()) {
            const ri::Action action = ri::read_system_json(system_path);
            const ri::Kernel k = ri::parse_kernel(kernel_tok);
            const ri::AtomicFunction in = ri::read_function_csv(input);
            if (in.size() != action.space()->size())
                throw std::runtime_error("--input: atom count does not match --system space");
            for (std::size_t i = 0; i < in.size(); ++i)
                if (in.space->masses()[i] != action.space()->masses()[i])
                    throw std::runtime_error("--input: atom masses do not match --system space");
            // rebind onto the system space: the CSV orders atoms by row
            const ri::AtomicFunction f(action.space(), std::vector<double>(in.values));
            ri::write_function_csv(out_path, ri::transfer_apply(k, action, f));
            return 0;
        }
        if (verify->parsed())
            return run_verify(suite, config_path, out_path, seed, jobs, seed_opt->count() > 0,
                              jobs_opt->count() > 0);
        if (statphys->parsed()) {
            (void)sp_seed_opt;
            const auto records = ri::statphys_suite({});
            bool all_pass = true;
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                os = &file;
            }
            for (const auto& rec : records) {
                *os << rec.to_json().dump() << '\n';
                all_pass = all_pass && rec.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
