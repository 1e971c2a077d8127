#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eebandit/analytic.hpp"

namespace eebandit {

/// One logged slot of an episode.
struct TraceRecord {
    std::uint64_t slot = 0;      ///< 1-based
    std::size_t arm = 0;
    double power = 0.0;          ///< W
    double weighted_rate = 0.0;  ///< sum_j w_j R_j
    double ee_contribution = 0.0;  ///< weighted_rate / charged power
    double ee_cum = 0.0;         ///< EE(slot)
    double regret_cum = 0.0;     ///< pseudo-regret up to slot
};

struct RunTrace {
    std::vector<TraceRecord> records;  ///< checkpoints, or every slot with full logging
    std::vector<std::uint64_t> pull_counts;
    std::uint64_t slots = 0;
    double ee_sum = 0.0;     ///< running sum of ee contributions
    double regret = 0.0;     ///< running pseudo-regret
    double chosen_ee_sum = 0.0;  ///< sum_t ee_per_arm[I_t]

    double ee() const { return slots == 0 ? 0.0 : ee_sum / static_cast<double>(slots); }
};

/// Slots 1..9, 10..90 step 10, 100..900 step 100, ... up to `horizon`,
/// always including `horizon` itself.
std::vector<std::uint64_t> checkpoint_grid(std::uint64_t horizon);

bool is_checkpoint(std::uint64_t slot, std::uint64_t horizon);

/// Accumulates EE and pseudo-regret for one episode.
class TraceRecorder {
public:
    TraceRecorder(const MeanRateTable& table, std::uint64_t horizon, bool full_trace);

    /// `charged_power` is the denominator of the EE contribution (transmit
    /// power plus any per-slot overhead).
    void record(std::size_t arm, double power, double weighted_rate, double charged_power);

    std::uint64_t slot() const { return trace_.slots; }
    RunTrace finish() &&;

private:
    const MeanRateTable& table_;
    std::uint64_t horizon_;
    bool full_trace_;
    RunTrace trace_;
};

} // namespace eebandit
