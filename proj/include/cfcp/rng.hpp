#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string_view>

namespace cfcp {

namespace detail {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace detail

/// Counter-based 64-bit generator (splitmix64 state advance). A value type:
/// copy freely, never share one instance mutably across threads. Streams are
/// keyed by (seed, label) and practically independent across labels.
class Rng {
  public:
    Rng() = default;

    static Rng from_state(std::uint64_t state) {
        Rng r;
        r.state_ = state;
        return r;
    }

    static Rng make(std::uint64_t seed, std::string_view stream_label) {
        return from_state(detail::mix64(detail::mix64(seed) ^ detail::fnv1a64(stream_label)));
    }

    /// Derived child stream; does not advance this generator.
    Rng substream(std::uint64_t index) const {
        return from_state(detail::mix64(state_ ^ detail::mix64(index + 0x9E3779B97F4A7C15ull)));
    }

    Rng substream(std::string_view label) const {
        return from_state(detail::mix64(state_ ^ detail::fnv1a64(label)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return detail::mix64(state_);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Draw from N(mu, sigma^2). sigma == 0 returns mu exactly and consumes
    /// no randomness. Box-Muller, cosine branch only (sin spare would add a
    /// second platform math function and per-object state).
    double gaussian(double mu, double sigma) {
        if (sigma < 0.0) throw std::invalid_argument("gaussian: sigma must be >= 0");
        if (sigma == 0.0) return mu;
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Unbiased uniform integer in [0, n). Lemire's multiply-shift rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be > 0");
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::uint64_t state() const { return state_; }

    friend bool operator==(const Rng&, const Rng&) = default;

  private:
    std::uint64_t state_ = 0;
};

inline Rng make_rng(std::uint64_t seed, std::string_view stream_label) {
    return Rng::make(seed, stream_label);
}

} // namespace cfcp
