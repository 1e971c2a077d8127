#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eebandit/params.hpp"
#include "eebandit/rng.hpp"

namespace eebandit {

/// Realized squared gains of every link for one slot.
struct ChannelGains {
    std::vector<double> g_sq;  ///< energy links
    std::vector<double> h_sq;  ///< information links
};

/// What happened in one slot for a given transmit power.
struct SlotOutcome {
    std::vector<double> g_sq;
    std::vector<double> h_sq;
    std::vector<double> energy;  ///< harvested, W, in [0, b_max]
    std::vector<int> decode;     ///< 0 or 1
    std::vector<double> rates;   ///< decode * r0
    double weighted_rate = 0.0;  ///< sum_j w_j rates_j
};

/// Exponential variate of mean 2*variance by inverse transform of `u` in [0,1).
double gain_sq_from_uniform(double variance, double u);

/// Squared Rayleigh gain |X|^2 for X ~ CN(0, variance).
double sample_gain_sq(double variance, EnvRng& rng);

/// min(b_max, max(0, lambda * power * g_sq - p_min)).
double harvested_energy(double power, double g_sq, const SystemParams& params);

/// Product threshold sigma^2 (2^r0 - 1): decoding succeeds iff E|H|^2 exceeds it.
double decode_threshold(const SystemParams& params);

/// 1 iff energy * h_sq > decode_threshold(params).
int decode_outcome(double energy, double h_sq, const SystemParams& params);

/// Draws g_sq for every link, then h_sq for every link, in node order.
void draw_gains(std::span<const LinkStats> links, EnvRng& rng, ChannelGains& out);

/// Applies harvesting, decoding and rate accounting to already drawn gains.
void evaluate_slot(double power, const ChannelGains& gains, const SystemParams& params,
                   SlotOutcome& out);

/// One slot at `power`, which must be a member of params.powers.
/// Throws ConfigError otherwise.
SlotOutcome step(double power, const SystemParams& params, std::span<const LinkStats> links,
                 EnvRng& rng);

/// Stateful wrapper that reuses buffers across slots of one replication.
class ChannelEnv {
public:
    ChannelEnv(const SystemParams& params, std::vector<LinkStats> links, std::uint64_t seed);

    /// Fresh gains for the next slot; stays valid until the next call.
    const ChannelGains& draw();

    /// Outcome of the most recently drawn gains under `arm`.
    const SlotOutcome& evaluate(std::size_t arm);

    /// draw() followed by evaluate(arm).
    const SlotOutcome& step_arm(std::size_t arm);

    const SystemParams& params() const { return params_; }
    std::span<const LinkStats> links() const { return links_; }
    EnvRng& rng() { return rng_; }

private:
    SystemParams params_;
    std::vector<LinkStats> links_;
    EnvRng rng_;
    ChannelGains gains_;
    SlotOutcome outcome_;
};

} // namespace eebandit
