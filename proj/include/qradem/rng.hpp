#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qradem {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based derivation: every sub-experiment draws its own stream from
/// (root, counter) so reruns with the same root seed are byte-reproducible.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter) {
    return splitmix64(root ^ splitmix64(counter + 1));
}

/// Deterministic RNG wrapper. Only engine bits are used directly; the
/// standard distributions are avoided because their output is
/// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static Rng child(std::uint64_t root, std::uint64_t counter) {
        return Rng(derive_seed(root, counter));
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// +1 or -1 with equal probability.
    int rademacher() { return (eng_() >> 63) ? 1 : -1; }

    /// Uniform integer in [0, n) by rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace qradem
