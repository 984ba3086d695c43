#pragma once

#include <cstdint>
#include <vector>

namespace hedonic {

/// Fixed 64-bit shift-register generator, reproducible bit-for-bit across
/// platforms. Recurrence: x ^= x << 13; x ^= x >> 7; x ^= x << 17.
/// A zero seed (the recurrence's fixed point) is remapped to a nonzero
/// constant.
class Xorshift64 {
public:
    explicit Xorshift64(std::uint64_t seed)
        : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    /// Uniform integer in [0, bound); bound > 0. Modulo reduction: the tiny
    /// bias is irrelevant here and the output must stay platform-stable.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Fisher-Yates shuffle of {1..n}.
    std::vector<int> permutation(int n) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i >= 1; --i) {
            const auto j = static_cast<std::size_t>(
                next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(order[static_cast<std::size_t>(i)], order[j]);
        }
        return order;
    }

private:
    std::uint64_t state_;
};

}  // namespace hedonic
