#include "k3/qform/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3 {

namespace {

// x = p^v * u with u a p-adic unit.
long split_valuation(const Rat& x, const Int& p, Rat& unit)
{
    Int num = x.get_num(), den = x.get_den();
    long v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        --v;
    }
    unit = make_rat(num, den);
    return v;
}

int legendre(const Rat& u, const Int& p)
{
    Int r = mod_floor(u, p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v)
{
    if (a == 0 || b == 0)
        throw std::domain_error("Hilbert symbol of zero");
    if (v.is_infinite())
        return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p();
    Rat u, w;
    long alpha = split_valuation(a, p, u);
    long beta = split_valuation(b, p, w);
    if (p == 2) {
        long um = mod_floor(u, Int(8)).get_si(), wm = mod_floor(w, Int(8)).get_si();
        auto eps = [](long x) { return ((x - 1) / 2) & 1; };
        auto omega = [](long x) { return ((x * x - 1) / 8) & 1; };
        long e = eps(um) * eps(wm) + (alpha & 1) * omega(wm) + (beta & 1) * omega(um);
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    Int half = (p - 1) / 2;
    if ((alpha & 1) && (beta & 1) && mpz_odd_p(half.get_mpz_t()))
        s = -s;
    if (beta & 1)
        s *= legendre(u, p);
    if (alpha & 1)
        s *= legendre(w, p);
    return s;
}

bool is_local_square(const Rat& x, const Place& v)
{
    if (x == 0)
        throw std::domain_error("square test of zero");
    if (v.is_infinite())
        return x > 0;
    Rat u;
    long val = split_valuation(x, v.p(), u);
    if (val & 1)
        return false;
    if (v.p() == 2)
        return mod_floor(u, Int(8)) == 1;
    return legendre(u, v.p()) == 1;
}

std::vector<Int> prime_support(const Rat& x)
{
    std::vector<Int> out;
    if (x == 0)
        return out;
    for (const Int& part : {Int(x.get_num()), Int(x.get_den())}) {
        if (abs(part) <= 1)
            continue;
        for (auto& [p, e] : factor_integer(part))
            out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace k3
