#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eebandit/config.hpp"
#include "eebandit/params.hpp"

namespace eebandit::harness {

enum class Preset {
    fig1,
    fig2,
    fig3,
    regret_check,
    concentration_check,
    validate_oracle,
    run,
};

std::optional<Preset> parse_preset(std::string_view name);
std::string_view preset_name(Preset preset);

struct ExperimentConfig {
    Preset preset = Preset::run;
    /// Slots per episode (default 1e4).
    std::optional<std::uint64_t> horizon;
    /// Replications; for concentration-check the number of trials (default
    /// 1e5), for validate-oracle the slots per arm (default 1e6).
    std::optional<std::uint64_t> reps;
    std::uint64_t base_seed = 1;
    std::vector<std::size_t> k_list;      ///< empty: preset default
    std::vector<double> r0_list;          ///< empty: preset default
    std::vector<double> csi_cost_dbm;     ///< empty: preset default
    bool full_trace = false;
    ParamOverrides base;
    /// Worker count; 0 reads EEBANDIT_THREADS, else hardware concurrency.
    std::size_t threads = 0;
    /// Nonzero permutes the order in which replications are dispatched.
    std::uint64_t dispatch_shuffle_seed = 0;
};

struct AggregateRow {
    std::string scheme;
    std::size_t k = 0;
    double r0 = 0.0;
    std::optional<double> csi_cost_dbm;
    std::uint64_t slot = 0;
    double ee_mean = 0.0;
    double ee_se = 0.0;       ///< sample stddev / sqrt(reps)
    double regret_mean = 0.0;
    double thm1_bound = 0.0;
};

/// Mean pull count of one arm against its expected-pulls bound.
struct PullCheck {
    std::string instance;
    std::size_t arm = 0;
    double mean_pulls = 0.0;
    double bound = 0.0;
};

struct OracleCheck {
    std::string instance;
    std::size_t arm = 0;
    std::size_t node = 0;
    double analytic_mu = 0.0;
    double mc_mu = 0.0;
    double z = 0.0;
};

struct ConcentrationRow {
    std::uint64_t s = 0;
    double eps = 0.0;
    double frequency = 0.0;
    double standard_error = 0.0;
    double bound = 0.0;
};

struct ExperimentOutput {
    std::vector<AggregateRow> rows;
    std::vector<PullCheck> pulls;
    std::vector<OracleCheck> oracle;
    std::vector<ConcentrationRow> concentration;
    std::string csv;     ///< the preset's CSV document
    std::string report;  ///< human-readable summary
};

/// Runs a preset. Replication r of every cell uses seed base_seed + r, and
/// results are merged in replication order, so output does not depend on
/// thread count or dispatch order.
ExperimentOutput run_experiment(const ExperimentConfig& config);

/// run_experiment, then writes `csv` to `path`. Throws ConfigError if the
/// file cannot be written.
ExperimentOutput run_experiment(const ExperimentConfig& config, const std::string& path);

/// Two-arm-above-one reference instance: k = 2, powers {10, 20, 30} dBm,
/// r0 = 0.75, remaining constants at their defaults.
SystemParams desk_params();

/// Header `scheme,k,r0,csi_cost_dbm,slot,ee_mean,ee_se,regret_mean,thm1_bound`.
std::string aggregate_csv(std::span<const AggregateRow> rows);

/// Sorts by (scheme, k, r0, csi_cost_dbm, slot).
void sort_rows(std::vector<AggregateRow>& rows);

/// %.12g formatting used by every CSV writer.
std::string format_number(double value);

/// Lowest cost (dBm) at which the full-CSI EE stops exceeding the learner,
/// linearly interpolated between the bracketing grid points. nullopt when
/// the sign never changes within the grid.
std::optional<double> find_crossover(std::span<const double> costs_dbm,
                                     std::span<const double> csi_ee, double learner_ee);

/// Peak locations, scheme ratios, crossover cost; empty input gives "".
std::string summarize(std::span<const AggregateRow> rows);

} // namespace eebandit::harness
