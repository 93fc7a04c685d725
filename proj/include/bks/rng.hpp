#pragma once

#include <cmath>
#include <cstdint>

// Seedable, splittable deterministic generator. Per-shot streams are derived
// by hashing (master seed, shot index), so serial and parallel runs that sort
// results by shot index emit identical records.

namespace bks {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
        return SplitMix64(detail::mix64(master_seed ^ (index + 1) * detail::kGolden));
    }

    std::uint64_t next() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; one uniform pair per call.
    double next_normal() {
        double u1 = next_double();
        while (u1 == 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

}  // namespace bks
