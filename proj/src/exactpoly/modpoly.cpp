#include "k3/exactpoly/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace k3::modp {

void trim(MPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int degree(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly reduce(const Poly& f, std::uint64_t p)
{
    if (p < 2 || p > 0xffffffffULL)
        throw std::domain_error("modular arithmetic needs a prime below 2^32");
    MPoly out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients())
        out.push_back(mod_floor(c, Int(static_cast<unsigned long>(p))).get_ui());
    trim(out);
    return out;
}

Poly lift(const MPoly& f)
{
    std::vector<Rat> c;
    c.reserve(f.size());
    for (auto x : f)
        c.emplace_back(static_cast<unsigned long>(x));
    return Poly(std::move(c));
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw std::domain_error("inverse of zero mod p");
    return power(a, p - 2, p);
}

MPoly add(const MPoly& a, const MPoly& b, std::uint64_t p)
{
    MPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    trim(r);
    return r;
}

MPoly sub(const MPoly& a, const MPoly& b, std::uint64_t p)
{
    MPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

MPoly mul(const MPoly& a, const MPoly& b, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mul(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

MPoly scale(const MPoly& a, std::uint64_t c, std::uint64_t p)
{
    MPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mul(a[i], c, p);
    trim(r);
    return r;
}

void divmod(const MPoly& a, const MPoly& b, std::uint64_t p, MPoly& q, MPoly& r)
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero mod p");
    r = a;
    if (a.size() < b.size()) {
        q.clear();
        return;
    }
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = inverse(b.back(), p);
    q.assign(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        if (!r[i])
            continue;
        std::uint64_t c = mul(r[i], inv, p);
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = (r[i - db + j] + p - mul(c, b[j], p)) % p;
    }
    r.resize(db);
    trim(r);
    trim(q);
}

MPoly rem(const MPoly& a, const MPoly& b, std::uint64_t p)
{
    MPoly q, r;
    divmod(a, b, p, q, r);
    return r;
}

MPoly quot(const MPoly& a, const MPoly& b, std::uint64_t p)
{
    MPoly q, r;
    divmod(a, b, p, q, r);
    return q;
}

MPoly monic(const MPoly& a, std::uint64_t p)
{
    if (a.empty())
        return a;
    return scale(a, inverse(a.back(), p), p);
}

MPoly derivative(const MPoly& a, std::uint64_t p)
{
    if (a.size() <= 1)
        return {};
    MPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        d[i - 1] = mul(a[i], i % p, p);
    trim(d);
    return d;
}

MPoly gcd(const MPoly& a, const MPoly& b, std::uint64_t p)
{
    MPoly x = a, y = b;
    while (!y.empty()) {
        MPoly r = rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x, p);
}

void extended_gcd(const MPoly& a, const MPoly& b, std::uint64_t p, MPoly& g, MPoly& s, MPoly& t)
{
    MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        MPoly q, r;
        divmod(r0, r1, p, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        MPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    std::uint64_t inv = inverse(r0.back(), p);
    g = scale(r0, inv, p);
    s = scale(s0, inv, p);
    t = scale(t0, inv, p);
}

MPoly powmod(const MPoly& base, const Int& e, const MPoly& m, std::uint64_t p)
{
    MPoly result = rem(MPoly{1}, m, p);
    MPoly b = rem(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, b, p), m, p);
    }
    return result;
}

namespace {

// p-th root of a polynomial whose derivative vanishes: f(x) = g(x^p), and
// over F_p the coefficients are their own p-th roots.
MPoly pth_root(const MPoly& f, std::uint64_t p)
{
    MPoly g;
    for (std::size_t i = 0; i < f.size(); i += p)
        g.push_back(f[i]);
    trim(g);
    return g;
}

// Squarefree decomposition of a monic polynomial: pairs (a_i, i).
void squarefree(const MPoly& f, std::uint64_t p, int mult, std::vector<Factor>& out)
{
    if (degree(f) <= 0)
        return;
    MPoly fp = derivative(f, p);
    if (fp.empty()) {
        squarefree(pth_root(f, p), p, mult * static_cast<int>(p), out);
        return;
    }
    MPoly c = gcd(f, fp, p);
    MPoly w = quot(f, c, p);
    int i = 1;
    while (degree(w) > 0) {
        MPoly y = gcd(w, c, p);
        MPoly z = quot(w, y, p);
        if (degree(z) > 0)
            out.push_back({monic(z, p), i * mult});
        w = y;
        c = quot(c, y, p);
        ++i;
    }
    if (degree(c) > 0)
        squarefree(pth_root(c, p), p, mult * static_cast<int>(p), out);
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MPoly, int>> distinct_degree(const MPoly& f, std::uint64_t p)
{
    std::vector<std::pair<MPoly, int>> out;
    MPoly rest = f;
    MPoly x{0, 1};
    MPoly h = rem(x, rest, p);
    const Int pz(static_cast<unsigned long>(p));
    for (int d = 1; 2 * d <= degree(rest); ++d) {
        h = powmod(h, pz, rest, p);
        MPoly g = gcd(rest, sub(h, x, p), p);
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            rest = quot(rest, g, p);
            h = rem(h, rest, p);
        }
    }
    if (degree(rest) > 0)
        out.emplace_back(monic(rest, p), degree(rest));
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) with a fixed-seed generator so
// the result is reproducible.
void equal_degree(const MPoly& f, int d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<MPoly>& out)
{
    const int n = degree(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    Int pd = 1;
    for (int i = 0; i < d; ++i)
        pd *= static_cast<unsigned long>(p);
    for (;;) {
        MPoly a(n);
        for (auto& c : a)
            c = coeff(rng);
        trim(a);
        if (degree(a) <= 0)
            continue;
        MPoly b;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            MPoly t = rem(a, f, p), acc = t;
            for (int i = 1; i < d; ++i) {
                t = rem(mul(t, t, p), f, p);
                acc = add(acc, t, p);
            }
            b = acc;
        } else {
            b = sub(powmod(a, (pd - 1) / 2, f, p), MPoly{1}, p);
        }
        MPoly g = gcd(f, b, p);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(g, d, p, rng, out);
            equal_degree(quot(f, g, p), d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Factor> factor(const MPoly& f0, std::uint64_t p)
{
    MPoly f = f0;
    trim(f);
    if (f.empty())
        throw std::domain_error("factorization of the zero polynomial mod p");
    f = monic(f, p);
    std::vector<Factor> sqf;
    squarefree(f, p, 1, sqf);
    std::vector<Factor> out;
    std::mt19937_64 rng(0x6b33u);
    for (const auto& [a, m] : sqf)
        for (const auto& [g, d] : distinct_degree(a, p)) {
            std::vector<MPoly> parts;
            equal_degree(g, d, p, rng, parts);
            for (auto& part : parts)
                out.push_back({monic(part, p), m});
        }
    // Merge equal factors (a factor can appear via different squarefree layers
    // only when p-th powers are involved).
    std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
        if (x.poly.size() != y.poly.size())
            return x.poly.size() < y.poly.size();
        return x.poly < y.poly;
    });
    std::vector<Factor> merged;
    for (auto& fac : out) {
        if (!merged.empty() && merged.back().poly == fac.poly)
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(std::move(fac));
    }
    return merged;
}

bool is_irreducible(const MPoly& f, std::uint64_t p)
{
    if (degree(f) <= 0)
        return false;
    auto fs = factor(f, p);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace k3::modp
