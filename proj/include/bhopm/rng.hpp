#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace bhopm {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic RNG used everywhere randomness is needed. Normal variates use
/// the Marsaglia polar method so the draw sequence does not depend on the
/// standard library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Seed for stream `stream` derived from a master seed; used to give each
    /// chain an independent, reproducible stream.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        return splitmix64(master + 0x9E3779B97F4A7C15ull * (stream + 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Index drawn from an (unnormalized is fine) probability vector.
    int categorical(std::span<const double> probs) {
        double total = 0.0;
        for (double p : probs) total += p;
        double x = uniform() * total;
        for (std::size_t k = 0; k + 1 < probs.size(); ++k) {
            x -= probs[k];
            if (x < 0.0) return static_cast<int>(k);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    /// Uniform integer in [0, n).
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bhopm
