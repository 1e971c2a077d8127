#pragma once

namespace eebandit {

/// Speed of light in vacuum, m/s.
inline constexpr double kSpeedOfLight = 2.99792458e8;

/// 10^(dbm/10) mW expressed in watts. Throws ConfigError on non-finite input.
double dbm_to_watt(double dbm);

/// Inverse of dbm_to_watt. Throws ConfigError unless watts > 0 and finite.
double watt_to_dbm(double watts);

} // namespace eebandit
