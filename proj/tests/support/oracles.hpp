#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library's analytic or channel code, so agreement is a real cross-check.

#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

/// P(a|G|^2 |H|^2 > c) with |G|^2 ~ Exp(mean 2 var_g), |H|^2 ~ Exp(mean 2 var_h),
/// no clamping. Closed form 2 sqrt(z) K1(2 sqrt(z)), z = c / (A B).
inline double unclamped_success(double a, double var_g, double var_h, double c)
{
    const double z = c / ((2.0 * a * var_g) * (2.0 * var_h));
    const double x = 2.0 * std::sqrt(z);
    return x * std::cyl_bessel_k(1.0, x);
}

/// Brute-force frequency of E|H|^2 > c under the clamped harvesting law, with
/// its own engine and distributions.
inline double sampled_success(double power, double lambda, double p_min, double b_max,
                              double var_g, double var_h, double c, std::uint64_t draws,
                              std::uint32_t seed)
{
    std::mt19937 engine(seed);
    std::exponential_distribution<double> g_dist(1.0 / (2.0 * var_g));
    std::exponential_distribution<double> h_dist(1.0 / (2.0 * var_h));
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        double e = lambda * power * g_dist(engine) - p_min;
        e = e < 0.0 ? 0.0 : (e > b_max ? b_max : e);
        if (e * h_dist(engine) > c) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(draws);
}

inline double bernoulli_se(double p, std::uint64_t n)
{
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

} // namespace oracle
