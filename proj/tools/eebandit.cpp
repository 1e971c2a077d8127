// eebandit: run the energy-efficiency bandit experiments and write CSV.
//
//   eebandit <preset> [--config FILE] [--reps N] [--horizon N] [--seed N]
//            [--out PATH] [--k LIST] [--r0 LIST] [--csi-cost-dbm LIST] [--full-trace]
//
// Exit status: 0 success, 1 configuration error, 2 numerical failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eebandit/config.hpp"
#include "eebandit/errors.hpp"
#include "eebandit/experiment.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

} // namespace

int main(int argc, char** argv)
{
    using namespace eebandit;

    CLI::App app{"Energy-efficiency power learning for wirelessly powered networks"};
    app.set_version_flag("--version", "eebandit 0.1.0");

    std::string preset_text;
    std::string config_path;
    std::string out_path;
    std::uint64_t reps = 0;
    std::uint64_t horizon = 0;
    std::uint64_t seed = 1;
    std::vector<std::size_t> k_list;
    std::vector<double> r0_list;
    std::vector<double> cost_list;
    bool full_trace = false;

    app.add_option("preset", preset_text,
                   "fig1 | fig2 | fig3 | regret-check | concentration-check | validate-oracle | run")
        ->required();
    app.add_option("--config", config_path, "key=value parameter file");
    app.add_option("--reps", reps, "replications (trials for concentration-check, "
                                   "slots per arm for validate-oracle)");
    app.add_option("--horizon", horizon, "slots per episode");
    app.add_option("--seed", seed, "base seed; replication r uses seed + r");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--k", k_list, "comma-separated node counts")->delimiter(',');
    app.add_option("--r0", r0_list, "comma-separated rates, bpcu")->delimiter(',');
    app.add_option("--csi-cost-dbm", cost_list, "comma-separated CSI costs, dBm")->delimiter(',');
    app.add_flag("--full-trace", full_trace, "log every slot instead of checkpoints");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        harness::ExperimentConfig config;
        const auto preset = harness::parse_preset(preset_text);
        if (!preset) {
            std::cerr << "eebandit: unknown preset '" << preset_text << "'\n";
            return kExitConfig;
        }
        config.preset = *preset;
        if (!config_path.empty()) {
            config.base = load_config_file(config_path);
        }
        if (app.count("--reps") > 0) {
            if (reps < 1) {
                throw ConfigError("--reps must be at least 1");
            }
            config.reps = reps;
        }
        if (app.count("--horizon") > 0) {
            config.horizon = horizon;
        }
        config.base_seed = seed;
        config.k_list = k_list;
        config.r0_list = r0_list;
        config.csi_cost_dbm = cost_list;
        config.full_trace = full_trace;

        if (out_path.empty()) {
            const harness::ExperimentOutput out = harness::run_experiment(config);
            std::cout << out.csv;
            std::cerr << out.report;
        } else {
            const harness::ExperimentOutput out = harness::run_experiment(config, out_path);
            std::cout << out.report;
        }
    } catch (const ConfigError& e) {
        std::cerr << "eebandit: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericError& e) {
        std::cerr << "eebandit: numerical failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return 0;
}
