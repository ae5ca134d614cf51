#pragma once

#include <cstdint>

namespace simply {

// Campaign seed. Substreams are derived from (seed, trial, device) by counter
// mixing, so trials can be generated in any order on any platform with
// identical results.
struct RngSpec {
    std::uint64_t master_seed = 12345;
};

// SplitMix64 substream keyed by (seed, trial, device).
class SubStream {
public:
    SubStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t device)
        : state_(mix(mix(mix(seed) ^ trial) ^ device)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return finalize(state_);
    }

    // uniform in (0, 1), 53-bit resolution
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; pairs are cached
    double next_gaussian();

    // standard normal truncated to |z| <= bound by resampling
    double next_truncated_gaussian(double bound);

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t mix(std::uint64_t z) {
        return finalize(z + 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace simply
