#include <treefit/rng.hpp>

namespace treefit {

auto splitmix64(std::uint64_t x) -> std::uint64_t
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

auto derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) -> std::uint64_t
{
    return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index);
}

auto Rng::below(std::uint64_t bound) -> std::uint64_t
{
    // rejection sampling on the top of the range
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return x % bound;
}

auto Rng::between(long long lo, long long hi) -> long long
{
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

auto Rng::unit() -> double
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}
