#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eebandit/matrix.hpp"
#include "eebandit/params.hpp"
#include "eebandit/quadrature.hpp"

namespace eebandit {

/// Law of the clamped harvested energy E = min(b_max, max(0, a|G|^2 - p_min))
/// where |G|^2 is exponential with mean 2 var_g and a = lambda * power.
///
/// E has an atom at 0, an atom at b_max and density
/// exp(-(e + p_min)/scale)/scale on (0, b_max), with scale = 2 a var_g.
struct EnergyLaw {
    double scale = 0.0;
    double p_min = 0.0;
    double b_max = 0.0;  ///< may be +infinity

    double mass_at_zero() const;
    double mass_at_cap() const;
    /// Density on the open interval (0, b_max); throws ConfigError outside it.
    double density(double e) const;
    /// P(E <= e).
    double cdf(double e) const;
};

/// Requires a > 0 and var_g > 0.
EnergyLaw energy_law(double a, double p_min, double var_g, double b_max);

/// energy_law(a, p_min, var_g, b_max).density(e).
double energy_tail_density(double e, double a, double p_min, double var_g, double b_max);

/// P(E |H|^2 > sigma^2 (2^r0 - 1)) for transmit power `power` on `link`.
/// Throws NumericError if the quadrature does not converge.
double success_prob(double power, const LinkStats& link, const SystemParams& params,
                    const QuadratureOptions& options = {});

/// Expected per-node rates and the energy-efficiency ranking of the arms.
struct MeanRateTable {
    Matrix mu;                    ///< arms x nodes, bits per channel use
    std::vector<double> ee_per_arm;  ///< sum_j w_j mu_ij / p_i
    std::size_t opt_arm = 0;
    double opt_value = 0.0;
    std::vector<double> gaps;     ///< opt_value - ee_per_arm[i]
    std::optional<double> min_gap;   ///< smallest positive gap, if any

    std::size_t arms() const { return mu.rows(); }
    std::size_t nodes() const { return mu.cols(); }
};

/// Derives the EE ranking from a given mean-rate matrix. Ties in the argmax
/// go to the smallest power index.
MeanRateTable make_rate_table(Matrix mu, const SystemParams& params);

/// mu_ij = r0 * success_prob(p_i, link_j).
MeanRateTable mean_rate_table(const SystemParams& params, std::span<const LinkStats> links,
                              const QuadratureOptions& options = {});

} // namespace eebandit
