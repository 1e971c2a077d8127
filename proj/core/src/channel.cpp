#include "eebandit/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eebandit/errors.hpp"

namespace eebandit {

double gain_sq_from_uniform(double variance, double u)
{
    return -(2.0 * variance) * std::log1p(-u);
}

double sample_gain_sq(double variance, EnvRng& rng)
{
    return gain_sq_from_uniform(variance, rng.uniform());
}

double harvested_energy(double power, double g_sq, const SystemParams& params)
{
    const double raw = params.lambda_eff * power * g_sq - params.p_min;
    return std::min(params.b_max, std::max(0.0, raw));
}

double decode_threshold(const SystemParams& params)
{
    return params.noise_power * std::expm1(params.r0 * std::numbers::ln2);
}

int decode_outcome(double energy, double h_sq, const SystemParams& params)
{
    return energy * h_sq > decode_threshold(params) ? 1 : 0;
}

void draw_gains(std::span<const LinkStats> links, EnvRng& rng, ChannelGains& out)
{
    out.g_sq.resize(links.size());
    out.h_sq.resize(links.size());
    for (std::size_t j = 0; j < links.size(); ++j) {
        out.g_sq[j] = sample_gain_sq(links[j].var_g, rng);
    }
    for (std::size_t j = 0; j < links.size(); ++j) {
        out.h_sq[j] = sample_gain_sq(links[j].var_h, rng);
    }
}

void evaluate_slot(double power, const ChannelGains& gains, const SystemParams& params,
                   SlotOutcome& out)
{
    const std::size_t k = gains.g_sq.size();
    const double threshold = decode_threshold(params);
    out.g_sq = gains.g_sq;
    out.h_sq = gains.h_sq;
    out.energy.resize(k);
    out.decode.resize(k);
    out.rates.resize(k);
    out.weighted_rate = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        out.energy[j] = harvested_energy(power, gains.g_sq[j], params);
        out.decode[j] = out.energy[j] * gains.h_sq[j] > threshold ? 1 : 0;
        out.rates[j] = out.decode[j] * params.r0;
        out.weighted_rate += params.weights[j] * out.rates[j];
    }
}

SlotOutcome step(double power, const SystemParams& params, std::span<const LinkStats> links,
                 EnvRng& rng)
{
    if (std::find(params.powers.begin(), params.powers.end(), power) == params.powers.end()) {
        throw ConfigError("step: power is not in the configured power set");
    }
    if (links.size() != params.k) {
        throw ConfigError("step: link count does not match k");
    }
    ChannelGains gains;
    draw_gains(links, rng, gains);
    SlotOutcome out;
    evaluate_slot(power, gains, params, out);
    return out;
}

ChannelEnv::ChannelEnv(const SystemParams& params, std::vector<LinkStats> links,
                       std::uint64_t seed)
    : params_(params), links_(std::move(links)), rng_(seed)
{
    if (links_.size() != params_.k) {
        throw ConfigError("ChannelEnv: link count does not match k");
    }
}

const ChannelGains& ChannelEnv::draw()
{
    draw_gains(links_, rng_, gains_);
    return gains_;
}

const SlotOutcome& ChannelEnv::evaluate(std::size_t arm)
{
    evaluate_slot(params_.powers.at(arm), gains_, params_, outcome_);
    return outcome_;
}

const SlotOutcome& ChannelEnv::step_arm(std::size_t arm)
{
    draw();
    return evaluate(arm);
}

} // namespace eebandit
