#pragma once

#include <cstdint>
#include <random>

namespace satrep {

// xoshiro256** engine seeded through splitmix64. Streams are derived from a
// (master seed, stream index, purpose) key, so every consumer owns an
// independent generator and results do not depend on evaluation order.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

enum class StreamPurpose : std::uint64_t {
    device_count = 1,
    device_position = 2,
    channel_gain = 3,
    zenith_sample = 4,
    success_trial = 5,
};

// One exclusive random stream. Uniforms come straight from the engine
// mantissa; normal/poisson use the standard library distributions.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index,
                 StreamPurpose purpose)
        : engine_(mix_key(master_seed, stream_index,
                          static_cast<std::uint64_t>(purpose))) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal(double mean, double stddev) {
        std::normal_distribution<double> dist(mean, stddev);
        return dist(engine_);
    }

    long long poisson(double mean) {
        std::poisson_distribution<long long> dist(mean);
        return dist(engine_);
    }

    bool bernoulli(double p) { return uniform() < p; }

    Xoshiro256& engine() { return engine_; }

private:
    static std::uint64_t mix_key(std::uint64_t seed, std::uint64_t index,
                                 std::uint64_t purpose) {
        std::uint64_t x = seed;
        std::uint64_t k = Xoshiro256::splitmix64(x);
        x ^= index * 0x9e3779b97f4a7c15ULL;
        k ^= Xoshiro256::splitmix64(x);
        x ^= purpose * 0xd1342543de82ef95ULL;
        k ^= Xoshiro256::splitmix64(x);
        return k;
    }

    Xoshiro256 engine_;
};

} // namespace satrep
