#pragma once

#include <cmath>
#include <cstdint>

namespace qcbt {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent stream seed for a worker/trial index.
inline uint64_t stream_seed(uint64_t seed, uint64_t index) {
    uint64_t s = seed ^ (0x6a09e667f3bcc909ULL * (index + 1));
    return splitmix64(s);
}

// xoshiro256++ with splitmix64 seeding. Self-contained so that identical
// seeds give identical draw sequences on every platform and toolchain.
class Rng {
  public:
    explicit Rng(uint64_t seed = 0) {
        uint64_t sm = seed;
        for (auto& w : s_)
            w = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal via Marsaglia polar; the spare draw is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, q;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            q = u * u + v * v;
        } while (q >= 1.0 || q == 0.0);
        const double f = std::sqrt(-2.0 * std::log(q) / q);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

    // Exponential waiting time for a Poisson process of the given rate.
    double exponential(double rate) { return -std::log(1.0 - uniform01()) / rate; }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace qcbt
