#pragma once

#include <cstddef>
#include <vector>

namespace eebandit {

/// Physical and algorithmic constants of one network instance.
///
/// Every power-like quantity is stored in linear watts. The slot duration is
/// normalized to one, so harvested energy per slot is numerically a power.
struct SystemParams {
    std::size_t k = 0;              ///< number of energy-harvesting nodes
    std::vector<double> powers;     ///< transmit power set, W, strictly increasing
    std::vector<double> weights;    ///< per-node priority weights, sum to 1
    double r0 = 0.0;                ///< codeword rate, bits per channel use
    double lambda_eff = 0.0;        ///< harvesting inefficiency coefficient
    double p_min = 0.0;             ///< minimum operating power, W
    double b_max = 0.0;             ///< battery capacity, W
    double noise_power = 0.0;       ///< receiver noise, W
    double bandwidth = 0.0;         ///< Hz
    double noise_density = 0.0;     ///< W/Hz
    double alpha = 0.0;             ///< UCB exploration parameter
    double path_loss_exp = 0.0;

    std::size_t arms() const { return powers.size(); }
};

/// Geometry-derived fading statistics for one node.
struct LinkStats {
    std::size_t node_index = 0;  ///< 1-based
    double distance = 0.0;       ///< m
    double f_energy = 0.0;       ///< Hz, source -> node
    double f_info = 0.0;         ///< Hz, node -> source
    double var_g = 0.0;          ///< variance of the energy-link gain
    double var_h = 0.0;          ///< variance of the information-link gain
};

/// Throws ConfigError when any invariant of SystemParams is violated.
/// A single-arm power set is accepted for degenerate experiments.
void validate(const SystemParams& params);

/// Free-space variance 1/2 (c / (4 pi f))^2 d^-gamma.
double path_loss_variance(double freq, double dist, double gamma);

/// Link j (1-based) of the reference layout: d = 10 + 3j m, f_G = 2.4 GHz,
/// f_H = 2.4 GHz + j MHz.
LinkStats default_link_stats(const SystemParams& params, std::size_t j);

/// default_link_stats for j = 1..k.
std::vector<LinkStats> default_links(const SystemParams& params);

/// Reference configuration with k nodes: powers 0..30 dBm, uniform weights,
/// lambda 0.5, p_min -60 dBm, b_max -40 dBm, W = 100 kHz,
/// sigma0^2 = -170 dBm/Hz, gamma 2.5, alpha 3, r0 = 0.1 bpcu.
SystemParams default_params(std::size_t k);

std::vector<double> uniform_weights(std::size_t k);

} // namespace eebandit
