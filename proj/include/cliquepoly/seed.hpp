#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace cliquepoly {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-sensitive fold of values into a seed.
template <typename T>
std::uint64_t mix_seed(std::uint64_t seed, std::span<const T> values) noexcept {
    std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
    for (const T& v : values) {
        h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    }
    return splitmix64(h ^ static_cast<std::uint64_t>(values.size()));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> values) noexcept {
    return mix_seed(seed, std::span<const std::uint64_t>(values.begin(), values.size()));
}

/// Deterministic generator. The engine is fully specified by the standard;
/// the bounded and unit draws are implemented here because the standard
/// distributions are not portable bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cliquepoly
