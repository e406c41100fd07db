#include "k3/exactpoly/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace k3 {

unsigned long euler_phi(unsigned long n)
{
    if (n == 0)
        throw std::domain_error("euler_phi(0)");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

Poly cyclotomic(unsigned long n)
{
    if (n == 0)
        throw std::domain_error("cyclotomic(0)");
    static std::mutex mu;
    static std::map<unsigned long, Poly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    // T^n - 1 = prod_{d | n} Phi_d.
    Poly r = Poly::monomial(1, n) - Poly::constant(1);
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0)
            r = r / cyclotomic(d);
    std::lock_guard lock(mu);
    cache.emplace(n, r);
    return r;
}

std::optional<unsigned long> is_cyclotomic(const Poly& f)
{
    const int deg = f.degree();
    if (deg < 1 || f.leading() != 1)
        return std::nullopt;
    for (const auto& c : f.coefficients())
        if (!is_integer(c))
            return std::nullopt;
    const unsigned long limit = 3UL * deg * deg + 2;
    for (unsigned long n = 1; n <= limit; ++n)
        if (euler_phi(n) == static_cast<unsigned long>(deg) && cyclotomic(n) == f)
            return n;
    return std::nullopt;
}

}  // namespace k3
