#include "eebandit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "eebandit/analytic.hpp"
#include "eebandit/bandit.hpp"
#include "eebandit/bounds.hpp"
#include "eebandit/errors.hpp"
#include "eebandit/schemes.hpp"
#include "eebandit/units.hpp"

namespace eebandit::harness {

namespace {

constexpr std::uint64_t kDefaultHorizon = 10000;
constexpr std::uint64_t kDefaultReps = 200;
constexpr std::uint64_t kDefaultTrials = 100000;
constexpr std::uint64_t kDefaultSlotsPerArm = 1000000;
constexpr double kDefaultR0 = 0.1;

// fig3 CSI cost grid, dBm.
constexpr double kCostGridLow = -90.0;
constexpr double kCostGridHigh = 40.0;
constexpr double kCostGridStep = 5.0;

struct Instance {
    std::string label;
    SystemParams params;
    std::vector<LinkStats> links;
    MeanRateTable table;
};

Instance make_instance(std::string label, SystemParams params)
{
    Instance inst;
    inst.label = std::move(label);
    inst.links = default_links(params);
    inst.table = mean_rate_table(params, inst.links);
    inst.params = std::move(params);
    return inst;
}

struct Cell {
    std::string scheme;
    Policy policy;
    std::optional<double> cost_dbm;
    const Instance* instance = nullptr;
    bool final_only = false;
};

struct RepResult {
    std::vector<std::uint64_t> slots;
    std::vector<double> ee;
    std::vector<double> regret;
    std::vector<std::uint64_t> pulls;
};

std::size_t resolve_threads(std::size_t requested)
{
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("EEBANDIT_THREADS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return value;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(job) for job in [0, n). Dispatch order may be shuffled; callers
/// write results into slots indexed by job so the outcome is order-free.
void parallel_for(std::size_t n, std::size_t threads, std::uint64_t shuffle_seed,
                  const std::function<void(std::size_t)>& fn)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (shuffle_seed != 0) {
        std::mt19937_64 engine(shuffle_seed);
        std::shuffle(order.begin(), order.end(), engine);
    }
    const std::size_t workers = std::min(threads, n);
    if (workers <= 1) {
        for (std::size_t job : order) {
            fn(job);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                    try {
                        fn(order[i]);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        next.store(n);
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

RepResult summarize_trace(const RunTrace& trace, std::uint64_t horizon)
{
    RepResult r;
    for (const TraceRecord& rec : trace.records) {
        if (!is_checkpoint(rec.slot, horizon)) {
            continue;
        }
        r.slots.push_back(rec.slot);
        r.ee.push_back(rec.ee_cum);
        r.regret.push_back(rec.regret_cum);
    }
    r.pulls = trace.pull_counts;
    return r;
}

std::pair<double, double> mean_and_se(const std::vector<double>& values)
{
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    if (values.size() < 2) {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

ParamOverrides with_r0(ParamOverrides base, double r0)
{
    base.r0 = r0;
    return base;
}

std::vector<std::size_t> k_values(const ExperimentConfig& c, std::vector<std::size_t> fallback)
{
    if (!c.k_list.empty()) {
        return c.k_list;
    }
    if (c.base.k) {
        return {*c.base.k};
    }
    return fallback;
}

std::vector<double> r0_values(const ExperimentConfig& c, std::vector<double> fallback)
{
    if (!c.r0_list.empty()) {
        return c.r0_list;
    }
    if (c.base.r0) {
        return {*c.base.r0};
    }
    return fallback;
}

std::vector<double> default_cost_grid()
{
    std::vector<double> grid;
    for (double c = kCostGridLow; c <= kCostGridHigh + 1e-9; c += kCostGridStep) {
        grid.push_back(c);
    }
    return grid;
}

std::vector<double> fig2_r0_grid()
{
    std::vector<double> grid;
    for (int i = 1; i <= 12; ++i) {
        grid.push_back(0.25 * i);
    }
    return grid;
}

void require_horizon(const Instance& inst, std::uint64_t horizon)
{
    if (horizon < inst.params.arms()) {
        throw ConfigError("horizon must be at least the number of transmit powers");
    }
}

// Episode sweeps: fig1, fig2, fig3, regret-check.
ExperimentOutput run_sweep(const ExperimentConfig& config)
{
    const std::uint64_t horizon = config.horizon.value_or(kDefaultHorizon);
    const std::uint64_t reps = config.reps.value_or(kDefaultReps);
    if (reps < 1 || horizon < 1) {
        throw ConfigError("reps and horizon must be at least 1");
    }

    std::vector<std::size_t> ks;
    std::vector<double> r0s;
    switch (config.preset) {
    case Preset::fig1:
        ks = k_values(config, {4, 8, 12});
        r0s = r0_values(config, {kDefaultR0});
        break;
    case Preset::fig2:
        ks = k_values(config, {5});
        r0s = r0_values(config, fig2_r0_grid());
        break;
    case Preset::fig3:
        ks = k_values(config, {8});
        r0s = r0_values(config, {kDefaultR0});
        break;
    default:
        ks = k_values(config, {5});
        r0s = r0_values(config, {kDefaultR0});
        break;
    }
    const std::vector<double> costs =
        config.csi_cost_dbm.empty() ? default_cost_grid() : config.csi_cost_dbm;

    std::vector<std::unique_ptr<Instance>> instances;
    for (std::size_t k : ks) {
        for (double r0 : r0s) {
            instances.push_back(std::make_unique<Instance>(
                make_instance("default", make_params(with_r0(config.base, r0), k))));
        }
    }
    if (config.preset == Preset::regret_check) {
        instances.push_back(std::make_unique<Instance>(make_instance("desk3", desk_params())));
    }

    const bool final_only = config.preset == Preset::fig2 || config.preset == Preset::fig3;
    std::vector<Cell> cells;
    for (const auto& inst : instances) {
        require_horizon(*inst, horizon);
        const std::string suffix = inst->label == "desk3" ? "[desk3]" : "";
        cells.push_back({"ucb_eh" + suffix, ucb_eh_policy(), std::nullopt, inst.get(), final_only});
        if (config.preset == Preset::regret_check) {
            continue;
        }
        cells.push_back({"oracle", oracle_policy(inst->table), std::nullopt, inst.get(), final_only});
        cells.push_back(
            {"max_power", max_power_policy(inst->params), std::nullopt, inst.get(), final_only});
        if (config.preset == Preset::fig3) {
            for (double cost : costs) {
                cells.push_back({"full_csi", full_csi_policy(dbm_to_watt(cost)), cost, inst.get(),
                                 final_only});
            }
        }
    }

    const std::size_t jobs = cells.size() * reps;
    std::vector<RepResult> results(jobs);
    parallel_for(jobs, resolve_threads(config.threads), config.dispatch_shuffle_seed,
                 [&](std::size_t job) {
                     const Cell& cell = cells[job / reps];
                     const std::uint64_t rep = job % reps;
                     EnvRng rng(config.base_seed + rep);
                     const Instance& inst = *cell.instance;
                     const RunTrace trace = run_policy(cell.policy, inst.params, inst.links,
                                                       inst.table, horizon, rng);
                     results[job] = summarize_trace(trace, horizon);
                 });

    ExperimentOutput out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Cell& cell = cells[c];
        const Instance& inst = *cell.instance;
        const RepResult& first = results[c * reps];
        const std::size_t points = first.slots.size();
        for (std::size_t p = cell.final_only ? points - 1 : 0; p < points; ++p) {
            std::vector<double> ee(reps);
            std::vector<double> regret(reps);
            for (std::uint64_t r = 0; r < reps; ++r) {
                ee[r] = results[c * reps + r].ee[p];
                regret[r] = results[c * reps + r].regret[p];
            }
            AggregateRow row;
            row.scheme = cell.scheme;
            row.k = inst.params.k;
            row.r0 = inst.params.r0;
            row.csi_cost_dbm = cell.cost_dbm;
            row.slot = first.slots[p];
            std::tie(row.ee_mean, row.ee_se) = mean_and_se(ee);
            row.regret_mean = mean_and_se(regret).first;
            row.thm1_bound = theorem1_bound(inst.table, inst.params, static_cast<double>(row.slot));
            out.rows.push_back(std::move(row));
        }

        if (config.preset == Preset::regret_check) {
            for (std::size_t i = 0; i < inst.table.arms(); ++i) {
                if (!(inst.table.gaps[i] > 0.0)) {
                    continue;
                }
                double total = 0.0;
                for (std::uint64_t r = 0; r < reps; ++r) {
                    total += static_cast<double>(results[c * reps + r].pulls[i]);
                }
                out.pulls.push_back({cell.scheme + " k=" + std::to_string(inst.params.k), i,
                                     total / static_cast<double>(reps),
                                     pull_count_bound(inst.table, inst.params, static_cast<double>(horizon), i)});
            }
        }
    }
    sort_rows(out.rows);
    out.csv = aggregate_csv(out.rows);
    out.report = summarize(out.rows);

    if (config.preset == Preset::regret_check) {
        std::ostringstream rep;
        std::size_t violations = 0;
        for (const AggregateRow& row : out.rows) {
            if (row.slot > 1 && row.regret_mean > row.thm1_bound) {
                ++violations;
            }
        }
        rep << "regret vs theorem-1 bound: " << violations << " checkpoint(s) above the bound\n";
        std::size_t pull_violations = 0;
        for (const PullCheck& pc : out.pulls) {
            if (pc.mean_pulls > pc.bound) {
                ++pull_violations;
            }
        }
        rep << "mean pulls vs expected-pulls bound: " << pull_violations << " of "
            << out.pulls.size() << " suboptimal arm(s) above the bound\n";
        out.report += rep.str();
    }
    return out;
}

ExperimentOutput run_validate_oracle(const ExperimentConfig& config)
{
    const std::uint64_t slots = config.reps.value_or(kDefaultSlotsPerArm);
    if (slots < 1) {
        throw ConfigError("validate-oracle needs at least one slot per arm");
    }
    std::vector<std::unique_ptr<Instance>> instances;
    instances.push_back(std::make_unique<Instance>(make_instance("desk3", desk_params())));
    for (std::size_t k : k_values(config, {5})) {
        for (double r0 : r0_values(config, {kDefaultR0})) {
            instances.push_back(std::make_unique<Instance>(
                make_instance("default_k" + std::to_string(k),
                              make_params(with_r0(config.base, r0), k))));
        }
    }

    struct Job {
        const Instance* inst;
        std::size_t arm;
    };
    std::vector<Job> jobs;
    for (const auto& inst : instances) {
        for (std::size_t i = 0; i < inst->params.arms(); ++i) {
            jobs.push_back({inst.get(), i});
        }
    }
    std::vector<std::vector<double>> means(jobs.size());
    parallel_for(jobs.size(), resolve_threads(config.threads), config.dispatch_shuffle_seed,
                 [&](std::size_t idx) {
                     const Job& job = jobs[idx];
                     const SystemParams& p = job.inst->params;
                     EnvRng rng(config.base_seed + job.arm);
                     ChannelGains gains;
                     SlotOutcome outcome;
                     std::vector<std::uint64_t> successes(p.k, 0);
                     for (std::uint64_t t = 0; t < slots; ++t) {
                         draw_gains(job.inst->links, rng, gains);
                         evaluate_slot(p.powers[job.arm], gains, p, outcome);
                         for (std::size_t j = 0; j < p.k; ++j) {
                             successes[j] += static_cast<std::uint64_t>(outcome.decode[j]);
                         }
                     }
                     std::vector<double> mu(p.k);
                     for (std::size_t j = 0; j < p.k; ++j) {
                         mu[j] = p.r0 * static_cast<double>(successes[j]) /
                                 static_cast<double>(slots);
                     }
                     means[idx] = std::move(mu);
                 });

    ExperimentOutput out;
    std::ostringstream csv;
    csv << "instance,arm,node,analytic_mu,mc_mu,z\n";
    double worst = 0.0;
    for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
        const Job& job = jobs[idx];
        const SystemParams& p = job.inst->params;
        for (std::size_t j = 0; j < p.k; ++j) {
            const double mu = job.inst->table.mu(job.arm, j);
            const double se =
                std::sqrt(std::max(0.0, mu * (p.r0 - mu)) / static_cast<double>(slots) + 1e-300);
            OracleCheck oc{job.inst->label, job.arm, j + 1, mu, means[idx][j],
                           (means[idx][j] - mu) / se};
            worst = std::max(worst, std::abs(oc.z));
            csv << oc.instance << ',' << oc.arm << ',' << oc.node << ','
                << format_number(oc.analytic_mu) << ',' << format_number(oc.mc_mu) << ','
                << format_number(oc.z) << '\n';
            out.oracle.push_back(std::move(oc));
        }
    }
    out.csv = csv.str();
    std::ostringstream rep;
    rep << "analytic vs Monte Carlo mean rates (" << slots << " slots per arm)\n";
    rep << "  instance        arm node   analytic_mu        mc_mu        z\n";
    for (const OracleCheck& oc : out.oracle) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-14s %4zu %4zu  %12.6g  %12.6g  %7.3f\n",
                      oc.instance.c_str(), oc.arm, oc.node, oc.analytic_mu, oc.mc_mu, oc.z);
        rep << line;
    }
    rep << "max |z| = " << format_number(worst) << '\n';
    out.report = rep.str();
    return out;
}

ExperimentOutput run_concentration(const ExperimentConfig& config)
{
    const std::uint64_t trials = config.reps.value_or(kDefaultTrials);
    const Instance inst =
        make_instance("default", make_params(with_r0(config.base, r0_values(config, {kDefaultR0})[0]),
                                             k_values(config, {5})[0]));
    const std::size_t arm = inst.table.opt_arm;
    double sw2 = 0.0;
    for (double w : inst.params.weights) {
        sw2 += w * w;
    }
    const std::vector<std::uint64_t> samples{1, 10, 100, 1000};
    std::vector<double> eps;
    for (double f : {0.1, 0.25, 0.5}) {
        eps.push_back(f * inst.params.r0 * std::sqrt(sw2));
    }

    std::vector<std::vector<ConcentrationResult>> results(samples.size());
    parallel_for(samples.size(), resolve_threads(config.threads), config.dispatch_shuffle_seed,
                 [&](std::size_t idx) {
                     results[idx] = concentration_check(inst.params, inst.links, inst.table, arm,
                                                        samples[idx], eps, trials,
                                                        config.base_seed + idx);
                 });

    ExperimentOutput out;
    std::ostringstream csv;
    std::ostringstream rep;
    csv << "s,eps,frequency,standard_error,bound\n";
    rep << "weighted-mean concentration at arm " << arm << " (k=" << inst.params.k
        << ", r0=" << format_number(inst.params.r0) << ", " << trials << " trials)\n";
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        for (const ConcentrationResult& r : results[idx]) {
            ConcentrationRow row{samples[idx], r.eps, r.frequency, r.standard_error(), r.bound};
            csv << row.s << ',' << format_number(row.eps) << ',' << format_number(row.frequency)
                << ',' << format_number(row.standard_error) << ',' << format_number(row.bound)
                << '\n';
            const bool ok = row.frequency <= row.bound + 3.0 * row.standard_error;
            rep << "  s=" << row.s << " eps=" << format_number(row.eps)
                << " freq=" << format_number(row.frequency) << " bound=" << format_number(row.bound)
                << (ok ? "  ok" : "  ABOVE BOUND") << '\n';
            out.concentration.push_back(row);
        }
    }
    out.csv = csv.str();
    out.report = rep.str();
    return out;
}

ExperimentOutput run_trace_export(const ExperimentConfig& config)
{
    const std::uint64_t horizon = config.horizon.value_or(kDefaultHorizon);
    const std::uint64_t reps = config.reps.value_or(1);
    const Instance inst =
        make_instance("default", make_params(with_r0(config.base, r0_values(config, {kDefaultR0})[0]),
                                             k_values(config, {5})[0]));
    require_horizon(inst, horizon);

    std::vector<RunTrace> traces(reps);
    parallel_for(reps, resolve_threads(config.threads), config.dispatch_shuffle_seed,
                 [&](std::size_t rep) {
                     EnvRng rng(config.base_seed + rep);
                     traces[rep] = run_ucb_eh(inst.params, inst.links, inst.table, horizon, rng,
                                              RunOptions{config.full_trace});
                 });

    ExperimentOutput out;
    std::ostringstream csv;
    csv << "rep,slot,arm,power_dbm,weighted_rate,ee_cum,regret_cum,thm1_bound\n";
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
        for (const TraceRecord& r : traces[rep].records) {
            csv << rep << ',' << r.slot << ',' << r.arm << ',' << format_number(watt_to_dbm(r.power))
                << ',' << format_number(r.weighted_rate) << ',' << format_number(r.ee_cum) << ','
                << format_number(r.regret_cum) << ','
                << format_number(theorem1_bound(inst.table, inst.params, static_cast<double>(r.slot))) << '\n';
        }
    }
    out.csv = csv.str();

    std::ostringstream rep;
    rep << "UCB-EH, k=" << inst.params.k << ", r0=" << format_number(inst.params.r0)
        << ", horizon=" << horizon << ", reps=" << reps << '\n';
    rep << "  oracle arm " << inst.table.opt_arm << " ("
        << format_number(watt_to_dbm(inst.params.powers[inst.table.opt_arm]))
        << " dBm), oracle EE " << format_number(inst.table.opt_value) << '\n';
    for (std::uint64_t r = 0; r < reps; ++r) {
        rep << "  rep " << r << ": EE " << format_number(traces[r].ee()) << ", regret "
            << format_number(traces[r].regret) << '\n';
    }
    out.report = rep.str();
    return out;
}

} // namespace

std::optional<Preset> parse_preset(std::string_view name)
{
    for (Preset p : {Preset::fig1, Preset::fig2, Preset::fig3, Preset::regret_check,
                     Preset::concentration_check, Preset::validate_oracle, Preset::run}) {
        if (preset_name(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

std::string_view preset_name(Preset preset)
{
    switch (preset) {
    case Preset::fig1: return "fig1";
    case Preset::fig2: return "fig2";
    case Preset::fig3: return "fig3";
    case Preset::regret_check: return "regret-check";
    case Preset::concentration_check: return "concentration-check";
    case Preset::validate_oracle: return "validate-oracle";
    case Preset::run: return "run";
    }
    return "unknown";
}

SystemParams desk_params()
{
    ParamOverrides o;
    o.k = 2;
    o.r0 = 0.75;
    o.powers_dbm = std::vector<double>{10.0, 20.0, 30.0};
    return make_params(o);
}

ExperimentOutput run_experiment(const ExperimentConfig& config)
{
    switch (config.preset) {
    case Preset::fig1:
    case Preset::fig2:
    case Preset::fig3:
    case Preset::regret_check:
        return run_sweep(config);
    case Preset::validate_oracle:
        return run_validate_oracle(config);
    case Preset::concentration_check:
        return run_concentration(config);
    case Preset::run:
        return run_trace_export(config);
    }
    throw ConfigError("unknown preset");
}

ExperimentOutput run_experiment(const ExperimentConfig& config, const std::string& path)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw ConfigError("cannot open output file '" + path + "'");
    }
    ExperimentOutput out = run_experiment(config);
    file << out.csv;
    file.flush();
    if (!file) {
        throw ConfigError("failed writing output file '" + path + "'");
    }
    return out;
}

} // namespace eebandit::harness
