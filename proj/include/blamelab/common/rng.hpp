#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace blamelab {

// Deterministic RNG used everywhere randomness is needed. Wraps mt19937_64
// (whose raw output is pinned by the standard) and supplies its own
// distributions, since std:: distributions are implementation-defined and
// would break bit-identical regeneration across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // Stream derivation: (seed, label) -> independent child seed. Used to give
    // every program id its own stream so parallel and serial runs agree.
    static uint64_t derive(uint64_t seed, std::string_view label) {
        uint64_t h = 1469598103934665603ull ^ seed;
        for (char c : label) {
            h ^= static_cast<uint8_t>(c);
            h *= 1099511628211ull;
        }
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return h;
    }

    uint64_t u64() { return gen_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? gen_() % n : 0; }

    // uniform in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

    bool chance(double p) { return uniform() < p; }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    float uniform_range(float lo, float hi) {
        return lo + static_cast<float>(uniform()) * (hi - lo);
    }

    double normal() {
        // Box-Muller; spare cached for the next call.
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 1.0 - uniform();
        double v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        double a = 6.283185307179586 * v;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(below(v.size()))];
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; i--) {
            std::swap(v[i - 1], v[static_cast<size_t>(below(i))]);
        }
    }

    // index into a discrete weight vector
    size_t weighted(const std::vector<double>& weights) {
        double total = 0;
        for (double w : weights) total += w;
        double r = uniform() * total;
        double c = 0;
        for (size_t i = 0; i < weights.size(); i++) {
            c += weights[i];
            if (r < c) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace blamelab
