#ifndef RENEX_RNG_HPP
#define RENEX_RNG_HPP

#include <cmath>
#include <cstdint>

namespace renex {

/// Deterministic seed for one replication's variate streams.
/// The same (master_seed, replication_index) always reproduces the
/// same stream, independent of execution order across replications.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t replication_index = 0;
};

namespace detail {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
inline std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// xoshiro256++ generator. Stream seeds are derived by a splitmix-style
/// avalanche of (master_seed, replication_index, stream_tag), so distinct
/// replications and distinct stream tags get statistically independent
/// streams without any shared state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += detail::golden_gamma;
            word = detail::avalanche(sm);
        }
    }

    static Rng for_stream(const SeedSpec& seed, std::uint64_t stream_tag) {
        std::uint64_t h = detail::avalanche(
            seed.master_seed + detail::golden_gamma * (seed.replication_index + 1));
        h = detail::avalanche(h ^ (0xD1B54A32D192ED03ull * (stream_tag + 1)));
        return Rng(h);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform draw strictly inside (0,1); 53-bit resolution.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_exponential(double mean = 1.0) {
        return -mean * std::log(next_unit());
    }

    /// Pareto tail P(X > x) = (x/scale)^{-alpha} for x >= scale.
    double next_pareto(double alpha, double scale = 1.0) {
        return scale * std::pow(next_unit(), -1.0 / alpha);
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double next_normal() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_[4];
};

}  // namespace renex

#endif
