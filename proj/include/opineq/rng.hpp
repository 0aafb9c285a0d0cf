#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "opineq/errors.hpp"

namespace opineq {

// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard
// and every transform below is spelled out by hand, so a (seed, call
// sequence) pair reproduces the exact same doubles on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double log_uniform(double a, double b) {
        if (!(a > 0.0) || !(b > a))
            throw BadInterval("log_uniform: need 0 < a < b");
        return std::exp(uniform(std::log(a), std::log(b)));
    }

    // standard normal, Marsaglia polar method
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * m;
        has_cached_ = true;
        return u * m;
    }

    // inclusive on both ends
    int uniform_int(int lo, int hi) {
        return lo + int(uniform() * double(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-trial seed derivation: FNV-1a over the tag, mixed with the base seed
// and trial index. Stable across runs and platforms.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : tag) {
        h ^= std::uint64_t(static_cast<unsigned char>(c));
        h *= 1099511628211ull;
    }
    return splitmix64(h ^ splitmix64(base) ^ (0x9e3779b97f4a7c15ull * (index + 1)));
}

}  // namespace opineq
