#include "eebandit/bounds.hpp"

#include <cmath>
#include <numbers>

#include "eebandit/channel.hpp"
#include "eebandit/errors.hpp"

namespace eebandit {

namespace {

constexpr double kTailConstant = std::numbers::pi * std::numbers::pi / 3.0 + 1.0;

double sum_of_squares(std::span<const double> w)
{
    double s = 0.0;
    for (double x : w) {
        s += x * x;
    }
    return s;
}

} // namespace

double psi_star(double eps, double r0, double sum_w_sq)
{
    return 2.0 * eps * eps / (r0 * r0 * sum_w_sq);
}

double concentration_bound(std::uint64_t s, double eps, double r0, double sum_w_sq)
{
    return std::exp(-static_cast<double>(s) * psi_star(eps, r0, sum_w_sq));
}

double theorem1_bound(const MeanRateTable& table, const SystemParams& params, double n)
{
    if (!(n >= 1.0)) {
        throw ConfigError("theorem1_bound: horizon must be at least 1");
    }
    const double log_n = std::log(n);
    const double sw2 = sum_of_squares(params.weights);
    double leading = 0.0;
    double tail = 0.0;
    for (std::size_t i = 0; i < table.arms(); ++i) {
        const double gap = table.gaps[i];
        if (!(gap > 0.0)) {
            continue;
        }
        const double p = params.powers[i];
        leading += log_n * sw2 / (p * p * gap);
        tail += kTailConstant * gap;
    }
    return 6.0 * params.r0 * params.r0 * leading + tail;
}

double pull_count_bound(const MeanRateTable& table, const SystemParams& params, double n,
                        std::size_t arm)
{
    if (arm >= table.arms()) {
        throw ConfigError("pull_count_bound: arm out of range");
    }
    const double gap = table.gaps[arm];
    if (!(gap > 0.0)) {
        throw ConfigError("pull_count_bound: undefined for an optimal arm");
    }
    if (!(n >= 1.0)) {
        throw ConfigError("pull_count_bound: horizon must be at least 1");
    }
    const double p = params.powers[arm];
    const double log_n = std::log(n);
    return 6.0 * params.r0 * params.r0 * log_n * sum_of_squares(params.weights) /
               (p * p * gap * gap) +
           kTailConstant;
}

double ConcentrationResult::standard_error() const
{
    if (trials == 0) {
        return 0.0;
    }
    return std::sqrt(frequency * (1.0 - frequency) / static_cast<double>(trials));
}

std::vector<ConcentrationResult> concentration_check(const SystemParams& params,
                                                     std::span<const LinkStats> links,
                                                     const MeanRateTable& table, std::size_t arm,
                                                     std::uint64_t s, std::span<const double> eps,
                                                     std::uint64_t trials, std::uint64_t seed)
{
    if (s < 1) {
        throw ConfigError("concentration_check: need at least one sample");
    }
    if (arm >= params.arms()) {
        throw ConfigError("concentration_check: arm out of range");
    }
    double true_mean = 0.0;
    for (std::size_t j = 0; j < params.k; ++j) {
        true_mean += params.weights[j] * table.mu(arm, j);
    }

    std::vector<std::uint64_t> exceed(eps.size(), 0);
    EnvRng rng(seed);
    ChannelGains gains;
    SlotOutcome outcome;
    const double power = params.powers[arm];
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        double weighted_sum = 0.0;
        for (std::uint64_t t = 0; t < s; ++t) {
            draw_gains(links, rng, gains);
            evaluate_slot(power, gains, params, outcome);
            weighted_sum += outcome.weighted_rate;
        }
        const double deviation = true_mean - weighted_sum / static_cast<double>(s);
        for (std::size_t e = 0; e < eps.size(); ++e) {
            if (deviation > eps[e]) {
                ++exceed[e];
            }
        }
    }

    const double sw2 = sum_of_squares(params.weights);
    std::vector<ConcentrationResult> out;
    out.reserve(eps.size());
    for (std::size_t e = 0; e < eps.size(); ++e) {
        ConcentrationResult r;
        r.eps = eps[e];
        r.trials = trials;
        r.frequency = trials == 0 ? 0.0
                                  : static_cast<double>(exceed[e]) / static_cast<double>(trials);
        r.bound = concentration_bound(s, eps[e], params.r0, sw2);
        out.push_back(r);
    }
    return out;
}

ConcentrationResult concentration_check(const SystemParams& params,
                                        std::span<const LinkStats> links, std::size_t arm,
                                        std::uint64_t s, double eps, std::uint64_t trials,
                                        std::uint64_t seed)
{
    const MeanRateTable table = mean_rate_table(params, links);
    const double eps_list[] = {eps};
    return concentration_check(params, links, table, arm, s, eps_list, trials, seed).front();
}

} // namespace eebandit
