#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eebandit/analytic.hpp"
#include "eebandit/channel.hpp"
#include "eebandit/matrix.hpp"
#include "eebandit/params.hpp"
#include "eebandit/trace.hpp"

namespace eebandit {

/// Learner state of UCB-EH: pull counts and per-node empirical mean rates
/// for every transmit power.
///
/// Weights are taken as given, so property tests may scale them freely;
/// SystemParams validation is where they are required to sum to one.
class BanditState {
public:
    BanditState(std::vector<double> powers, std::vector<double> weights, double r0, double alpha);

    static BanditState from_params(const SystemParams& params);

    std::size_t arms() const { return powers_.size(); }
    std::size_t nodes() const { return weights_.size(); }

    /// Number of completed slots; equals the sum of pull counts.
    std::uint64_t t() const { return t_; }

    std::uint64_t pull_count(std::size_t arm) const { return pulls_.at(arm); }

    /// Observed-rate sum divided by the pull count; 0 for an unpulled arm.
    double emp_mean(std::size_t arm, std::size_t node) const;

    /// sum_j w_j * emp_mean(arm, j).
    double weighted_mean(std::size_t arm) const;

    double sum_w_sq() const { return sum_w_sq_; }
    double r0() const { return r0_; }
    double alpha() const { return alpha_; }
    std::span<const double> powers() const { return powers_; }
    std::span<const double> weights() const { return weights_; }

    /// Records one observation of every node's rate under `arm`.
    /// Each rate must be exactly 0 or r0; throws ConfigError otherwise.
    void update(std::size_t arm, std::span<const double> rates);

private:
    std::vector<double> powers_;
    std::vector<double> weights_;
    double r0_;
    double alpha_;
    double sum_w_sq_;
    std::uint64_t t_ = 0;
    std::vector<std::uint64_t> pulls_;
    Matrix rate_sums_;
    std::vector<double> weighted_sums_;  // sum_j w_j * rate_sums_(i, j)
};

/// r0 * sqrt(alpha ln t sum_j w_j^2 / (2 N_i)) for a (possibly fractional)
/// slot t >= 1. Throws ConfigError when the arm has never been pulled.
double confidence_radius(const BanditState& state, std::size_t arm, double t);

/// Weighted empirical mean plus confidence_radius.
double ucb_index(const BanditState& state, std::size_t arm, double t);

/// argmax_i ucb_index(i, t) / p_i, ties to the smallest power. Only valid
/// after the round-robin phase (t > m, every arm pulled).
std::size_t select_arm(const BanditState& state, std::uint64_t t);

struct RunOptions {
    bool full_trace = false;
};

/// Plays UCB-EH for `horizon` slots: arms 0..m-1 once each, then the index
/// rule. Pseudo-regret is measured against `table`.
RunTrace run_ucb_eh(const SystemParams& params, std::span<const LinkStats> links,
                    const MeanRateTable& table, std::uint64_t horizon, EnvRng& rng,
                    const RunOptions& options = {});

/// Same, computing the mean-rate table first.
RunTrace run_ucb_eh(const SystemParams& params, std::span<const LinkStats> links,
                    std::uint64_t horizon, EnvRng& rng, const RunOptions& options = {});

} // namespace eebandit
