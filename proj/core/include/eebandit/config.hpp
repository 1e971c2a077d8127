#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eebandit/params.hpp"

namespace eebandit {

/// Values read from a flat key=value config file. Unset fields fall back to
/// default_params(). Powers and noise density are kept in dBm as written.
struct ParamOverrides {
    std::optional<std::size_t> k;
    std::optional<double> r0;
    std::optional<double> alpha;
    std::optional<double> lambda;
    std::optional<double> p_min_dbm;
    std::optional<double> b_max_dbm;
    std::optional<double> bandwidth_hz;
    std::optional<double> noise_density_dbm_hz;
    std::optional<double> gamma;
    std::optional<std::vector<double>> powers_dbm;
    /// nullopt or an empty vector means uniform weights.
    std::optional<std::vector<double>> weights;
};

/// Parses `key = value` lines; '#' starts a comment, blank lines are skipped.
/// Unknown keys and malformed values throw ConfigError.
ParamOverrides parse_config(std::istream& in);

ParamOverrides load_config_file(const std::string& path);

/// Builds and validates a parameter set. `k_override` (e.g. from a sweep)
/// takes precedence over `overrides.k`; explicit weights must match it.
SystemParams make_params(const ParamOverrides& overrides,
                         std::optional<std::size_t> k_override = std::nullopt);

/// Splits "a,b,c" into doubles. Throws ConfigError on malformed entries.
std::vector<double> parse_double_list(const std::string& text);

} // namespace eebandit
