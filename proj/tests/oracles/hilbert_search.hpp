#pragma once

// Hilbert symbol by exhaustive search for a primitive zero of
// a x^2 + b y^2 - z^2 modulo p^N, N = 2 v_p(2ab) + 1 (enough for Hensel).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

inline int vp_long(long x, long p)
{
    int v = 0;
    x = x < 0 ? -x : x;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline int hilbert_search(long a, long b, long p)
{
    const int n = 2 * (vp_long(2 * a, p) + vp_long(b, p)) + 1;
    std::int64_t m = 1;
    for (int i = 0; i < n; ++i)
        m *= p;
    if (m > 4000)
        throw std::invalid_argument("hilbert_search: modulus too large");
    auto red = [m](long x) { return static_cast<std::int64_t>(((x % m) + m) % m); };
    const std::int64_t am = red(a), bm = red(b);
    // squares[v]: 0 none, 1 only from z divisible by p, 2 from a unit z.
    std::vector<char> squares(m, 0);
    for (std::int64_t z = 0; z < m; ++z) {
        auto s = z * z % m;
        squares[s] = std::max<char>(squares[s], z % p ? 2 : 1);
    }
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y) {
            auto v = (am * (x * x % m) + bm * (y * y % m)) % m;
            bool primitive_xy = x % p || y % p;
            if (squares[v] == 2 || (primitive_xy && squares[v] == 1))
                return 1;
        }
    return -1;
}

}  // namespace oracle
