#include "eebandit/units.hpp"

#include <cmath>

#include "eebandit/errors.hpp"

namespace eebandit {

double dbm_to_watt(double dbm)
{
    if (!std::isfinite(dbm)) {
        throw ConfigError("dbm_to_watt: non-finite input");
    }
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

double watt_to_dbm(double watts)
{
    if (!std::isfinite(watts) || watts <= 0.0) {
        throw ConfigError("watt_to_dbm: power must be positive and finite");
    }
    return 10.0 * std::log10(watts * 1e3);
}

} // namespace eebandit
