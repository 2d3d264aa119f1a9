#ifndef FSDKIT_RNG_HPP
#define FSDKIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace fsdkit {

/// Counter-free splitmix64 step; the whole project derives randomness from it.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small deterministic generator. Instances are cheap to create, so Monte
/// Carlo code derives one per (seed, sample index) and evaluation order does
/// not matter. Call counters are exposed so tests can audit how many draws an
/// algorithm consumed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // burn-in decorrelates adjacent integer seeds
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() {
        ++raw_draws_;
        return splitmix64(state_);
    }

    /// Uniform in [0, 1).
    double uniform() {
        ++uniform_calls_;
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        ++uniform_calls_;
        // modulo bias is negligible for n << 2^64
        return next_u64() % n;
    }

    /// Standard normal via Box-Muller, one cached draw.
    double normal() {
        ++normal_calls_;
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        do {
            u1 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        } while (u1 <= 0.0);
        const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    bool bernoulli(double p) {
        ++bernoulli_calls_;
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p;
    }

    std::uint64_t raw_draws() const { return raw_draws_; }
    std::uint64_t uniform_calls() const { return uniform_calls_; }
    std::uint64_t normal_calls() const { return normal_calls_; }
    std::uint64_t bernoulli_calls() const { return bernoulli_calls_; }

private:
    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
    std::uint64_t raw_draws_ = 0;
    std::uint64_t uniform_calls_ = 0;
    std::uint64_t normal_calls_ = 0;
    std::uint64_t bernoulli_calls_ = 0;
};

/// FNV-1a over a label, for deriving named substreams from one seed.
inline std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

/// Seed of the named substream (train / gaussian / bernoulli / corruption / ...).
inline std::uint64_t substream_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t s = seed ^ hash_label(name);
    splitmix64(s);
    return splitmix64(s);
}

/// Per-item seed within a substream, e.g. one Monte Carlo sample.
inline std::uint64_t derive_seed(std::uint64_t stream_seed, std::uint64_t index) {
    std::uint64_t s = stream_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

}  // namespace fsdkit

#endif
