#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eebandit/analytic.hpp"
#include "eebandit/params.hpp"

namespace eebandit {

/// Rate function of the weighted-sum deviation: 2 eps^2 / (r0^2 sum_j w_j^2).
double psi_star(double eps, double r0, double sum_w_sq);

/// exp(-s psi_star(eps)).
double concentration_bound(std::uint64_t s, double eps, double r0, double sum_w_sq);

/// Problem-dependent regret bound after n slots:
/// 6 r0^2 sum_{gap>0} ln(n) sum w^2 / (p_i^2 gap_i) + sum_{gap>0} (pi^2/3 + 1) gap_i.
/// Arms with zero gap do not contribute. Requires n >= 1.
double theorem1_bound(const MeanRateTable& table, const SystemParams& params, double n);

/// Bound on E[N_i(n)] for a suboptimal arm:
/// 6 r0^2 ln(n) sum w^2 / (p_i^2 gap_i^2) + pi^2/3 + 1.
/// Throws ConfigError when the arm has zero gap.
double pull_count_bound(const MeanRateTable& table, const SystemParams& params, double n,
                        std::size_t arm);

struct ConcentrationResult {
    double eps = 0.0;
    double frequency = 0.0;  ///< fraction of trials with deviation > eps
    double bound = 0.0;      ///< exp(-s psi_star(eps))
    std::uint64_t trials = 0;

    /// Binomial standard error of `frequency`.
    double standard_error() const;
};

/// Simulates `trials` independent s-slot episodes at `arm` and counts how
/// often sum_j w_j (mu_ij - muhat_ij) exceeds each eps.
std::vector<ConcentrationResult> concentration_check(const SystemParams& params,
                                                     std::span<const LinkStats> links,
                                                     const MeanRateTable& table, std::size_t arm,
                                                     std::uint64_t s, std::span<const double> eps,
                                                     std::uint64_t trials, std::uint64_t seed);

ConcentrationResult concentration_check(const SystemParams& params,
                                        std::span<const LinkStats> links, std::size_t arm,
                                        std::uint64_t s, double eps, std::uint64_t trials,
                                        std::uint64_t seed);

} // namespace eebandit
