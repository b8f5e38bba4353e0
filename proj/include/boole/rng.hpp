#pragma once

#include <cstdint>

namespace boole {

/// Addresses one reproducible random sequence. Identical (seed, stream)
/// yields the identical sequence on every platform.
struct RngSpec {
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
};

/// PCG32 (XSH-RR output function over a 64-bit LCG), the repository's only
/// random generator. The full algorithm is written out in the README so
/// golden files can be reproduced independently of this code.
class Pcg32 {
  public:
    Pcg32(std::uint64_t seed, std::uint64_t stream) : inc_((stream << 1u) | 1u) {
        state_ = 0;
        next_u32();
        state_ += seed;
        next_u32();
    }
    explicit Pcg32(const RngSpec& spec) : Pcg32(spec.seed, spec.stream) {}

    std::uint32_t next_u32() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform double in [0, 1): 53 bits assembled from two 32-bit draws.
    double next_double() {
        const std::uint64_t hi = next_u32() >> 5;   // 27 bits
        const std::uint64_t lo = next_u32() >> 6;   // 26 bits
        return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace boole
