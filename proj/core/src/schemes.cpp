#include "eebandit/schemes.hpp"

#include <cmath>
#include <vector>

#include "eebandit/errors.hpp"

namespace eebandit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

std::string Policy::name() const
{
    return std::visit(Overloaded{
                          [](const OraclePolicy&) { return std::string("oracle"); },
                          [](const MaxPowerPolicy&) { return std::string("max_power"); },
                          [](const UcbEhPolicy&) { return std::string("ucb_eh"); },
                          [](const FullCsiPolicy&) { return std::string("full_csi"); },
                      },
                      rule);
}

double Policy::overhead_watts() const
{
    if (const auto* csi = std::get_if<FullCsiPolicy>(&rule)) {
        return csi->cost_watts;
    }
    return 0.0;
}

Policy oracle_policy(const MeanRateTable& table)
{
    return Policy{OraclePolicy{table.opt_arm}};
}

Policy max_power_policy(const SystemParams& params)
{
    if (params.powers.empty()) {
        throw ConfigError("max_power_policy: empty power set");
    }
    return Policy{MaxPowerPolicy{params.powers.size() - 1}};
}

Policy ucb_eh_policy()
{
    return Policy{UcbEhPolicy{}};
}

Policy full_csi_policy(double cost_watts)
{
    if (!std::isfinite(cost_watts) || cost_watts < 0.0) {
        throw ConfigError("full_csi_policy: cost must be finite and non-negative");
    }
    return Policy{FullCsiPolicy{cost_watts}};
}

std::size_t full_csi_select(const SystemParams& params, const ChannelGains& gains,
                            double cost_watts)
{
    const std::size_t m = params.arms();
    const std::size_t k = gains.g_sq.size();
    const double threshold = decode_threshold(params);

    // Decoding is monotone in power, so each node has a first arm at which
    // it succeeds (m if none).
    thread_local std::vector<std::size_t> first_success;
    thread_local std::vector<std::size_t> newly_decoding;
    first_success.assign(k, m);
    newly_decoding.assign(m + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t lo = 0;
        std::size_t hi = m;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            const double e = harvested_energy(params.powers[mid], gains.g_sq[j], params);
            if (e * gains.h_sq[j] > threshold) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        first_success[j] = lo;
        ++newly_decoding[lo];
    }

    // An arm that adds no decoding node has the same numerator as its
    // predecessor over a larger denominator, so it cannot be the argmax.
    std::size_t best = 0;
    double best_ratio = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0 && newly_decoding[i] == 0) {
            continue;
        }
        double weighted = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            weighted += params.weights[j] * (first_success[j] <= i ? params.r0 : 0.0);
        }
        const double ratio = weighted / (params.powers[i] + cost_watts);
        if (ratio > best_ratio) {
            best = i;
            best_ratio = ratio;
        }
    }
    return best;
}

RunTrace run_policy(const Policy& policy, const SystemParams& params,
                    std::span<const LinkStats> links, const MeanRateTable& table,
                    std::uint64_t horizon, EnvRng& rng, const RunOptions& options)
{
    if (horizon < 1) {
        throw ConfigError("run_policy: horizon must be at least 1");
    }
    if (std::holds_alternative<UcbEhPolicy>(policy.rule)) {
        return run_ucb_eh(params, links, table, horizon, rng, options);
    }
    if (links.size() != params.k) {
        throw ConfigError("run_policy: link count does not match k");
    }

    const double overhead = policy.overhead_watts();
    TraceRecorder recorder(table, horizon, options.full_trace);
    ChannelGains gains;
    SlotOutcome outcome;
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        draw_gains(links, rng, gains);
        const std::size_t arm = std::visit(
            Overloaded{
                [](const OraclePolicy& p) { return p.arm; },
                [](const MaxPowerPolicy& p) { return p.arm; },
                [](const UcbEhPolicy&) -> std::size_t { return 0; },
                [&](const FullCsiPolicy& p) { return full_csi_select(params, gains, p.cost_watts); },
            },
            policy.rule);
        const double power = params.powers.at(arm);
        evaluate_slot(power, gains, params, outcome);
        recorder.record(arm, power, outcome.weighted_rate, power + overhead);
    }
    return std::move(recorder).finish();
}

} // namespace eebandit
