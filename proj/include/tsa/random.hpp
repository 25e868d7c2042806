#pragma once

#include <cstdint>

namespace tsa {

/**
 * @brief Counter-based 64-bit generator.
 *
 * The i-th draw is a pure function of (seed, stream, i): a SplitMix64
 * finalizer applied to a keyed counter. Gaussian variates come from the
 * inverse normal CDF, so a given seed yields the same stream on every
 * platform with IEEE doubles.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    [[nodiscard]] std::uint64_t next_u64() noexcept;
    /// Uniform on the open interval (0, 1).
    [[nodiscard]] double uniform() noexcept;
    [[nodiscard]] double normal();
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace tsa
