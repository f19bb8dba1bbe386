#pragma once

#include <cstdint>
#include <vector>

namespace hera {

/// Deterministic counter-based generator (splitmix64 stream). Portable across
/// platforms; a (seed, draw-count) pair fully determines every output.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n) by rejection sampling.
    uint64_t below(uint64_t n) {
        uint64_t limit = n * (~0ULL / n);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    /// Fisher-Yates shuffle of 0..n-1.
    std::vector<size_t> permutation(size_t n) {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = i;
        for (size_t i = n; i > 1; --i) {
            size_t j = size_t(below(i));
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

private:
    uint64_t state_;
};

} // namespace hera
