#pragma once

#include <cstdint>
#include <random>

namespace eebandit {

/// Seedable stream for one replication. Identical seeds give identical
/// sequences within a build.
class EnvRng {
public:
    explicit EnvRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace eebandit
