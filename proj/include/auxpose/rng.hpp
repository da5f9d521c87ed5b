#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace auxpose {

// Seeded PRNG with fixed derivation rules so runs reproduce bit-for-bit
// across platforms and standard-library versions. std::uniform_*_distribution
// is implementation-defined, so all derived draws are spelled out here.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0,1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Modulo reduction; the modulo bias is
    // negligible for n << 2^64 and the mapping is fixed forever.
    uint64_t bounded(uint64_t n) { return n ? next_u64() % n : 0; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Box-Muller with a cached spare, again to avoid library variance.
    double normal(double mean = 0.0, double sigma = 1.0) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + sigma * spare_;
        }
        double u1 = 0.0;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return mean + sigma * r * std::cos(theta);
    }

    // Stable stream derivation (SplitMix64 finalizer over seed and tag) so
    // per-item generators do not depend on processing order or thread count.
    static uint64_t derive(uint64_t seed, uint64_t tag) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace auxpose
