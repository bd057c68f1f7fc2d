#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace treefit {

// SplitMix64 finalizer.
auto splitmix64(std::uint64_t x) -> std::uint64_t;

// Child seed for stream `stream` and index `index` under `master`. Distinct
// (stream, index) pairs give independent-looking seeds; the mapping is fixed
// and platform independent.
auto derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) -> std::uint64_t;

// mt19937_64 with platform-independent bounded draws (std distributions are
// implementation-defined, which would break cross-platform reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed), seed_(seed) {}

    auto seed() const -> std::uint64_t { return seed_; }
    auto next() -> std::uint64_t { return engine_(); }

    // Uniform in [0, bound). bound must be positive.
    auto below(std::uint64_t bound) -> std::uint64_t;
    auto between(long long lo, long long hi) -> long long;
    // Uniform in [0, 1).
    auto unit() -> double;
    auto coin(double p) -> bool { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    // First `count` entries of `v` become a uniform sample without
    // replacement (partial Fisher-Yates); the rest is left permuted.
    template <typename T>
    void partial_shuffle(std::vector<T> & v, std::size_t count)
    {
        for (std::size_t i = 0; i < count && i < v.size(); ++i)
            std::swap(v[i], v[i + below(v.size() - i)]);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}
