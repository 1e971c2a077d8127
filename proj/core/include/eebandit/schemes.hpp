#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "eebandit/analytic.hpp"
#include "eebandit/bandit.hpp"
#include "eebandit/channel.hpp"
#include "eebandit/params.hpp"
#include "eebandit/trace.hpp"

namespace eebandit {

/// Always plays the EE-optimal arm of a mean-rate table.
struct OraclePolicy {
    std::size_t arm = 0;
};

/// Always plays the largest power; needs no channel knowledge.
struct MaxPowerPolicy {
    std::size_t arm = 0;
};

/// The learner; episodes route through run_ucb_eh.
struct UcbEhPolicy {};

/// Per-slot genie that sees every realized gain and maximizes
/// sum_j w_j O_j(p_i) r0 / (p_i + cost). The CSI cost is charged every slot.
struct FullCsiPolicy {
    double cost_watts = 0.0;
};

struct Policy {
    std::variant<OraclePolicy, MaxPowerPolicy, UcbEhPolicy, FullCsiPolicy> rule;

    std::string name() const;
    /// Per-slot overhead added to the transmit power in EE accounting.
    double overhead_watts() const;
};

Policy oracle_policy(const MeanRateTable& table);
Policy max_power_policy(const SystemParams& params);
Policy ucb_eh_policy();
/// Throws ConfigError for a negative or non-finite cost.
Policy full_csi_policy(double cost_watts);

/// Arm picked by the full-CSI rule for one slot's gains. Ties go to the
/// smallest power.
std::size_t full_csi_select(const SystemParams& params, const ChannelGains& gains,
                            double cost_watts);

/// Runs one episode of `policy`. EE divides by p_i + overhead; pseudo-regret
/// is measured against `table`.
RunTrace run_policy(const Policy& policy, const SystemParams& params,
                    std::span<const LinkStats> links, const MeanRateTable& table,
                    std::uint64_t horizon, EnvRng& rng, const RunOptions& options = {});

} // namespace eebandit
