// Command-line front end: run configured experiments, replicate the two
// preset studies, or cross-check the interval optimizer against brute force.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sensim/harness.hpp"
#include "sensim/io.hpp"

namespace {

void print_error(const std::string& message) {
    nlohmann::json j;
    j["error"] = message;
    std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive sensor placement simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed_override;
    auto* run = app.add_subcommand("run", "Run an experiment from a JSON config");
    run->add_option("--config", config_path, "Experiment config JSON")->required();
    run->add_option("--seed", seed_override, "Override the config master seed");
    run->add_option("--out", out_dir, "Output directory");

    std::string experiment;
    std::string paper_out = "out";
    std::optional<std::uint64_t> paper_seed;
    auto* rep = app.add_subcommand("replicate-paper", "Run a preset study");
    rep->add_option("--experiment", experiment, "unimodal or bimodal")
        ->required()
        ->check(CLI::IsMember({"unimodal", "bimodal"}));
    rep->add_option("--out", paper_out, "Output directory");
    rep->add_option("--seed", paper_seed, "Master seed (default 12345)");

    std::uint64_t instances = 500;
    std::uint64_t oracle_seed = 7;
    auto* oracle = app.add_subcommand(
        "oracle-check", "Randomized optimizer-vs-brute-force verification");
    oracle->add_option("--instances", instances, "Number of random instances");
    oracle->add_option("--seed", oracle_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        print_error(e.what());
        return 2;
    }

    try {
        if (*run) {
            auto cfg = sensim::config_from_json_file(config_path);
            if (seed_override) cfg.seed = *seed_override;
            const auto written = sensim::run_and_emit(cfg, out_dir);
            for (const auto& p : written) std::cout << p.string() << '\n';
        } else if (*rep) {
            const auto written = sensim::replicate_paper(experiment, paper_out, paper_seed);
            for (const auto& p : written) std::cout << p.string() << '\n';
        } else if (*oracle) {
            const auto res = sensim::run_oracle_check(instances, oracle_seed);
            std::cout << "instances: " << res.instances << '\n'
                      << "passed:    " << res.instances - res.failures << '\n'
                      << "failed:    " << res.failures << '\n'
                      << "max gap:   " << sensim::format_double(res.max_abs_gap) << '\n';
            if (res.failures > 0) {
                print_error("oracle check failed on " + std::to_string(res.failures) +
                            " instances");
                return 1;
            }
        }
    } catch (const std::exception& e) {
        print_error(e.what());
        return 1;
    }
    return 0;
}
