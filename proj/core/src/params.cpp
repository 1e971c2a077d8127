#include "eebandit/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eebandit/errors.hpp"
#include "eebandit/units.hpp"

namespace eebandit {

namespace {

void require(bool cond, const char* what)
{
    if (!cond) {
        throw ConfigError(std::string("invalid parameters: ") + what);
    }
}

} // namespace

void validate(const SystemParams& p)
{
    require(p.k >= 1, "k must be at least 1");
    require(p.weights.size() == p.k, "weights must have k entries");
    double sum = 0.0;
    for (double w : p.weights) {
        require(std::isfinite(w) && w >= 0.0 && w <= 1.0, "weights must lie in [0,1]");
        sum += w;
    }
    require(std::abs(sum - 1.0) <= 1e-12, "weights must sum to 1");

    require(!p.powers.empty(), "power set is empty");
    for (std::size_t i = 0; i < p.powers.size(); ++i) {
        require(std::isfinite(p.powers[i]) && p.powers[i] > 0.0, "powers must be positive");
        if (i > 0) {
            require(p.powers[i] > p.powers[i - 1], "powers must be strictly increasing");
        }
    }

    require(p.lambda_eff >= 0.0 && p.lambda_eff < 1.0, "lambda must lie in [0,1)");
    require(p.p_min >= 0.0 && std::isfinite(p.p_min), "p_min must be >= 0");
    require(p.b_max > 0.0 && std::isfinite(p.b_max), "b_max must be > 0");
    require(p.r0 > 0.0 && std::isfinite(p.r0), "r0 must be > 0");
    require(p.alpha > 0.0 && std::isfinite(p.alpha), "alpha must be > 0");
    require(p.bandwidth > 0.0 && p.noise_density > 0.0, "bandwidth and noise density must be > 0");
    const double expected_noise = p.bandwidth * p.noise_density;
    require(std::abs(p.noise_power - expected_noise) <= 1e-12 * expected_noise,
            "noise_power must equal bandwidth * noise_density");
    require(p.path_loss_exp >= 0.0 && std::isfinite(p.path_loss_exp), "gamma must be >= 0");
}

double path_loss_variance(double freq, double dist, double gamma)
{
    if (!(freq > 0.0) || !(dist > 0.0)) {
        throw ConfigError("path_loss_variance: frequency and distance must be positive");
    }
    const double lambda_over = kSpeedOfLight / (4.0 * std::numbers::pi * freq);
    return 0.5 * lambda_over * lambda_over * std::pow(dist, -gamma);
}

LinkStats default_link_stats(const SystemParams& params, std::size_t j)
{
    if (j < 1 || j > params.k) {
        throw ConfigError("default_link_stats: node index out of range");
    }
    LinkStats link;
    link.node_index = j;
    link.distance = 10.0 + 3.0 * static_cast<double>(j);
    link.f_energy = 2.4e9;
    link.f_info = 2.4e9 + 1e6 * static_cast<double>(j);
    link.var_g = path_loss_variance(link.f_energy, link.distance, params.path_loss_exp);
    link.var_h = path_loss_variance(link.f_info, link.distance, params.path_loss_exp);
    return link;
}

std::vector<LinkStats> default_links(const SystemParams& params)
{
    std::vector<LinkStats> links;
    links.reserve(params.k);
    for (std::size_t j = 1; j <= params.k; ++j) {
        links.push_back(default_link_stats(params, j));
    }
    return links;
}

std::vector<double> uniform_weights(std::size_t k)
{
    return std::vector<double>(k, 1.0 / static_cast<double>(k));
}

SystemParams default_params(std::size_t k)
{
    if (k == 0) {
        throw ConfigError("default_params: k must be at least 1");
    }
    SystemParams p;
    p.k = k;
    for (int dbm = 0; dbm <= 30; ++dbm) {
        p.powers.push_back(dbm_to_watt(dbm));
    }
    p.weights = uniform_weights(k);
    p.r0 = 0.1;
    p.lambda_eff = 0.5;
    p.p_min = dbm_to_watt(-60.0);
    p.b_max = dbm_to_watt(-40.0);
    p.bandwidth = 100e3;
    p.noise_density = dbm_to_watt(-170.0);
    p.noise_power = p.bandwidth * p.noise_density;
    p.alpha = 3.0;
    p.path_loss_exp = 2.5;
    return p;
}

} // namespace eebandit
