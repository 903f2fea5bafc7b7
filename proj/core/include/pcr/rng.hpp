#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pcr {

// Seeded RNG with portable helpers. The mt19937_64 engine is fully
// specified by the standard; the std::uniform_* distributions are not,
// so this class rolls its own draws to keep outputs identical across
// standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Unbiased draw in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices drawn from [0, n), in draw order. k must be <= n.
    std::vector<size_t> sample_indices(size_t n, size_t k);

private:
    std::mt19937_64 engine_;
};

}  // namespace pcr
