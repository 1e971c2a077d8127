#include "eebandit/trace.hpp"

#include <utility>

namespace eebandit {

std::vector<std::uint64_t> checkpoint_grid(std::uint64_t horizon)
{
    std::vector<std::uint64_t> grid;
    for (std::uint64_t decade = 1; decade <= horizon; decade *= 10) {
        for (std::uint64_t d = 1; d <= 9; ++d) {
            const std::uint64_t slot = d * decade;
            if (slot > horizon) {
                break;
            }
            grid.push_back(slot);
        }
        if (decade > horizon / 10) {
            break;
        }
    }
    if (grid.empty() || grid.back() != horizon) {
        grid.push_back(horizon);
    }
    return grid;
}

bool is_checkpoint(std::uint64_t slot, std::uint64_t horizon)
{
    if (slot == horizon) {
        return true;
    }
    std::uint64_t decade = 1;
    while (slot / decade >= 10) {
        decade *= 10;
    }
    return slot % decade == 0;
}

TraceRecorder::TraceRecorder(const MeanRateTable& table, std::uint64_t horizon, bool full_trace)
    : table_(table), horizon_(horizon), full_trace_(full_trace)
{
    trace_.pull_counts.assign(table.arms(), 0);
}

void TraceRecorder::record(std::size_t arm, double power, double weighted_rate,
                           double charged_power)
{
    const double contribution = weighted_rate / charged_power;
    ++trace_.slots;
    ++trace_.pull_counts[arm];
    trace_.ee_sum += contribution;
    trace_.regret += table_.gaps[arm];
    trace_.chosen_ee_sum += table_.ee_per_arm[arm];

    if (full_trace_ || is_checkpoint(trace_.slots, horizon_)) {
        trace_.records.push_back(TraceRecord{trace_.slots, arm, power, weighted_rate, contribution,
                                             trace_.ee(), trace_.regret});
    }
}

RunTrace TraceRecorder::finish() &&
{
    return std::move(trace_);
}

} // namespace eebandit
