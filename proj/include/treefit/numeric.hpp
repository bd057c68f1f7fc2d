#pragma once

#include <cstdint>
#include <limits>

namespace treefit {

// base^exponent, saturating at the largest long long.
inline auto saturating_power(long long base, int exponent) -> long long
{
    long long r = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && r > std::numeric_limits<long long>::max() / base)
            return std::numeric_limits<long long>::max();
        r *= base;
    }
    return r;
}

}
