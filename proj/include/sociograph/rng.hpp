#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sociograph {

// Seedable random source. The generator family is pinned to mt19937_64 and
// all sampling helpers are implemented here (not via std::*_distribution,
// whose output is implementation-defined), so a seed reproduces the same
// stream on every platform.
class Rng {
public:
    static constexpr const char* algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n). Rejection sampling over a power-of-two mask.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> countl_zero(n - 1);
        std::uint64_t draw;
        do {
            draw = engine_() & mask;
        } while (draw >= n);
        return draw;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[uniform_index(i)]);
        }
    }

    // Derives an independent per-stream seed (splitmix64 finalizer), so
    // trial i can run on its own generator regardless of execution order.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static int countl_zero(std::uint64_t x) {
        int count = 64;
        while (x != 0) {
            x >>= 1;
            --count;
        }
        return count;
    }

    std::mt19937_64 engine_;
};

} // namespace sociograph
