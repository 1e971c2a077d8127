#pragma once

#include <stdexcept>
#include <string>

namespace eebandit {

/// Invalid parameters, configuration or call sequence.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to produce a trustworthy value.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eebandit
