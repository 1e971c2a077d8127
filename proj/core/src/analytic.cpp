#include "eebandit/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eebandit/channel.hpp"
#include "eebandit/errors.hpp"

namespace eebandit {

double EnergyLaw::mass_at_zero() const
{
    return -std::expm1(-p_min / scale);
}

double EnergyLaw::mass_at_cap() const
{
    if (std::isinf(b_max)) {
        return 0.0;
    }
    return std::exp(-(b_max + p_min) / scale);
}

double EnergyLaw::density(double e) const
{
    if (!(e > 0.0) || !(e < b_max)) {
        throw ConfigError("energy density is defined on (0, b_max) only");
    }
    return std::exp(-(e + p_min) / scale) / scale;
}

double EnergyLaw::cdf(double e) const
{
    if (e < 0.0) {
        return 0.0;
    }
    if (e >= b_max) {
        return 1.0;
    }
    return -std::expm1(-(e + p_min) / scale);
}

EnergyLaw energy_law(double a, double p_min, double var_g, double b_max)
{
    if (!(a > 0.0) || !(var_g > 0.0)) {
        throw ConfigError("energy_law: a and var_g must be positive");
    }
    return EnergyLaw{2.0 * a * var_g, p_min, b_max};
}

double energy_tail_density(double e, double a, double p_min, double var_g, double b_max)
{
    return energy_law(a, p_min, var_g, b_max).density(e);
}

double success_prob(double power, const LinkStats& link, const SystemParams& params,
                    const QuadratureOptions& options)
{
    if (!(power > 0.0)) {
        throw ConfigError("success_prob: power must be positive");
    }
    const double c = decode_threshold(params);
    if (c <= 0.0) {
        return 1.0;
    }
    const double a = params.lambda_eff * power;
    if (a <= 0.0) {
        return 0.0;
    }
    const EnergyLaw law = energy_law(a, params.p_min, link.var_g, params.b_max);
    const double beta = c / (2.0 * link.var_h);
    const double b_max = params.b_max;

    // P(|H|^2 > c/e) * f_E(e); the e -> 0+ limit is 0.
    const auto integrand = [&](double e) {
        if (e <= 0.0) {
            return 0.0;
        }
        return std::exp(-beta / e - (e + law.p_min) / law.scale) / law.scale;
    };

    // The integrand peaks near sqrt(beta * scale) and decays on scales beta
    // and `scale`; seed geometric breakpoints around all three so no panel
    // starts out blind to the mass.
    std::vector<double> points{0.0, b_max};
    const double peak = std::sqrt(beta * law.scale);
    for (double anchor : {peak, beta, law.scale}) {
        for (int s = -24; s <= 24; s += 2) {
            const double x = std::ldexp(anchor, s);
            if (x > 0.0 && x < b_max) {
                points.push_back(x);
            }
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const double body = adaptive_simpson(integrand, points, options).value;
    const double cap = std::exp(-beta / b_max) * law.mass_at_cap();
    return std::clamp(body + cap, 0.0, 1.0);
}

MeanRateTable make_rate_table(Matrix mu, const SystemParams& params)
{
    if (mu.rows() != params.arms() || mu.cols() != params.k) {
        throw ConfigError("make_rate_table: matrix shape does not match parameters");
    }
    MeanRateTable t;
    t.mu = std::move(mu);
    const std::size_t m = t.mu.rows();
    t.ee_per_arm.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double weighted = 0.0;
        for (std::size_t j = 0; j < t.mu.cols(); ++j) {
            weighted += params.weights[j] * t.mu(i, j);
        }
        t.ee_per_arm[i] = weighted / params.powers[i];
    }
    t.opt_arm = 0;
    for (std::size_t i = 1; i < m; ++i) {
        if (t.ee_per_arm[i] > t.ee_per_arm[t.opt_arm]) {
            t.opt_arm = i;
        }
    }
    t.opt_value = t.ee_per_arm[t.opt_arm];
    t.gaps.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        t.gaps[i] = t.opt_value - t.ee_per_arm[i];
        if (t.gaps[i] > 0.0 && (!t.min_gap || t.gaps[i] < *t.min_gap)) {
            t.min_gap = t.gaps[i];
        }
    }
    return t;
}

MeanRateTable mean_rate_table(const SystemParams& params, std::span<const LinkStats> links,
                              const QuadratureOptions& options)
{
    if (links.size() != params.k) {
        throw ConfigError("mean_rate_table: link count does not match k");
    }
    Matrix mu(params.arms(), params.k);
    for (std::size_t i = 0; i < params.arms(); ++i) {
        for (std::size_t j = 0; j < params.k; ++j) {
            mu(i, j) = params.r0 * success_prob(params.powers[i], links[j], params, options);
        }
    }
    return make_rate_table(std::move(mu), params);
}

} // namespace eebandit
