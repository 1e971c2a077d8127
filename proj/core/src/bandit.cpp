#include "eebandit/bandit.hpp"

#include <cmath>
#include <utility>

#include "eebandit/errors.hpp"

namespace eebandit {

BanditState::BanditState(std::vector<double> powers, std::vector<double> weights, double r0,
                         double alpha)
    : powers_(std::move(powers)),
      weights_(std::move(weights)),
      r0_(r0),
      alpha_(alpha),
      sum_w_sq_(0.0),
      pulls_(powers_.size(), 0),
      rate_sums_(powers_.size(), weights_.size()),
      weighted_sums_(powers_.size(), 0.0)
{
    if (powers_.empty() || weights_.empty()) {
        throw ConfigError("BanditState: need at least one arm and one node");
    }
    for (double w : weights_) {
        sum_w_sq_ += w * w;
    }
}

BanditState BanditState::from_params(const SystemParams& params)
{
    return BanditState(params.powers, params.weights, params.r0, params.alpha);
}

double BanditState::emp_mean(std::size_t arm, std::size_t node) const
{
    const std::uint64_t n = pulls_.at(arm);
    return n == 0 ? 0.0 : rate_sums_(arm, node) / static_cast<double>(n);
}

double BanditState::weighted_mean(std::size_t arm) const
{
    const std::uint64_t n = pulls_.at(arm);
    return n == 0 ? 0.0 : weighted_sums_[arm] / static_cast<double>(n);
}

void BanditState::update(std::size_t arm, std::span<const double> rates)
{
    if (arm >= arms()) {
        throw ConfigError("BanditState::update: arm out of range");
    }
    if (rates.size() != nodes()) {
        throw ConfigError("BanditState::update: one rate per node expected");
    }
    for (double r : rates) {
        if (r != 0.0 && r != r0_) {
            throw ConfigError("BanditState::update: rate must be 0 or r0");
        }
    }
    double weighted = 0.0;
    for (std::size_t j = 0; j < rates.size(); ++j) {
        rate_sums_(arm, j) += rates[j];
        weighted += weights_[j] * rates[j];
    }
    weighted_sums_[arm] += weighted;
    ++pulls_[arm];
    ++t_;
}

namespace {

double radius_given_log(const BanditState& state, std::size_t arm, double log_t)
{
    const std::uint64_t n = state.pull_count(arm);
    if (n == 0) {
        throw ConfigError("confidence_radius: arm has not been initialized");
    }
    return state.r0() *
           std::sqrt(state.alpha() * log_t * state.sum_w_sq() / (2.0 * static_cast<double>(n)));
}

} // namespace

double confidence_radius(const BanditState& state, std::size_t arm, double t)
{
    return radius_given_log(state, arm, std::log(t));
}

double ucb_index(const BanditState& state, std::size_t arm, double t)
{
    return state.weighted_mean(arm) + confidence_radius(state, arm, t);
}

std::size_t select_arm(const BanditState& state, std::uint64_t t)
{
    if (t <= state.arms()) {
        throw ConfigError("select_arm: called during the round-robin phase");
    }
    const double log_t = std::log(static_cast<double>(t));
    const auto ratio_of = [&](std::size_t i) {
        return (state.weighted_mean(i) + radius_given_log(state, i, log_t)) / state.powers()[i];
    };
    std::size_t best = 0;
    double best_ratio = ratio_of(0);
    for (std::size_t i = 1; i < state.arms(); ++i) {
        const double ratio = ratio_of(i);
        if (ratio > best_ratio) {
            best = i;
            best_ratio = ratio;
        }
    }
    return best;
}

RunTrace run_ucb_eh(const SystemParams& params, std::span<const LinkStats> links,
                    const MeanRateTable& table, std::uint64_t horizon, EnvRng& rng,
                    const RunOptions& options)
{
    const std::size_t m = params.arms();
    if (horizon < m) {
        throw ConfigError("run_ucb_eh: horizon must cover the round-robin phase");
    }
    if (links.size() != params.k) {
        throw ConfigError("run_ucb_eh: link count does not match k");
    }
    BanditState state = BanditState::from_params(params);
    TraceRecorder recorder(table, horizon, options.full_trace);
    ChannelGains gains;
    SlotOutcome outcome;

    for (std::uint64_t t = 1; t <= horizon; ++t) {
        const std::size_t arm = t <= m ? static_cast<std::size_t>(t - 1) : select_arm(state, t);
        const double power = params.powers[arm];
        draw_gains(links, rng, gains);
        evaluate_slot(power, gains, params, outcome);
        state.update(arm, outcome.rates);
        recorder.record(arm, power, outcome.weighted_rate, power);
    }
    return std::move(recorder).finish();
}

RunTrace run_ucb_eh(const SystemParams& params, std::span<const LinkStats> links,
                    std::uint64_t horizon, EnvRng& rng, const RunOptions& options)
{
    const MeanRateTable table = mean_rate_table(params, links);
    return run_ucb_eh(params, links, table, horizon, rng, options);
}

} // namespace eebandit
