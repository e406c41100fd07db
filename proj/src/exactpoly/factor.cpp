#include "k3/exactpoly/factor.hpp"

#include "k3/exactpoly/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3 {

Poly Factorization::expand() const
{
    Poly r = Poly::constant(unit);
    for (const auto& fp : factors)
        r *= fp.factor.pow(static_cast<unsigned>(fp.multiplicity));
    return r;
}

namespace {

using IPoly = std::vector<Int>;

void itrim(IPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

IPoly to_ipoly(const Poly& f) { return f.integer_coefficients(); }

Poly to_poly(const IPoly& f)
{
    std::vector<Rat> c(f.begin(), f.end());
    return Poly(std::move(c));
}

IPoly imul(const IPoly& a, const IPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    itrim(r);
    return r;
}

IPoly from_mod(const modp::MPoly& f)
{
    IPoly r;
    for (auto c : f)
        r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

modp::MPoly to_mod(const IPoly& f, std::uint64_t p)
{
    modp::MPoly r;
    const Int pz(static_cast<unsigned long>(p));
    for (const auto& c : f)
        r.push_back(mod_floor(c, pz).get_ui());
    modp::trim(r);
    return r;
}

void reduce_mod(IPoly& f, const Int& m)
{
    for (auto& c : f)
        c = mod_floor(c, m);
    itrim(f);
}

// Symmetric residues in (-m/2, m/2].
IPoly symmetric(IPoly f, const Int& m)
{
    for (auto& c : f) {
        c = mod_floor(c, m);
        if (2 * c > m)
            c -= m;
    }
    itrim(f);
    return f;
}

// Lifts f = lc * g * h (mod p), g monic, to the same identity mod p^k.
// On return g is monic mod p^k and h has leading coefficient lc(f).
void hensel_two(const IPoly& f, IPoly& g, IPoly& h, std::uint64_t p, unsigned k)
{
    modp::MPoly gm = to_mod(g, p), hm = to_mod(h, p), one, s, t;
    modp::extended_gcd(gm, hm, p, one, s, t);
    if (modp::degree(one) != 0)
        throw std::logic_error("Hensel lifting: factors not coprime mod p");
    const Int pz(static_cast<unsigned long>(p));
    Int pm = pz;
    for (unsigned m = 1; m < k; ++m) {
        IPoly gh = imul(g, h);
        IPoly e(std::max(f.size(), gh.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            Int a = i < f.size() ? f[i] : Int(0), b = i < gh.size() ? gh[i] : Int(0);
            Int diff = a - b;
            if (!mpz_divisible_p(diff.get_mpz_t(), pm.get_mpz_t()))
                throw std::logic_error("Hensel lifting: invariant lost");
            e[i] = diff / pm;
        }
        itrim(e);
        modp::MPoly em = to_mod(e, p);
        // dg = t*e mod g ; dh = (e - dg*h) / g.
        modp::MPoly dg = modp::rem(modp::mul(t, em, p), gm, p);
        modp::MPoly dh = modp::quot(modp::sub(em, modp::mul(dg, hm, p), p), gm, p);
        IPoly dgi = from_mod(dg), dhi = from_mod(dh);
        g.resize(std::max(g.size(), dgi.size()), 0);
        for (std::size_t i = 0; i < dgi.size(); ++i)
            g[i] += pm * dgi[i];
        h.resize(std::max(h.size(), dhi.size()), 0);
        for (std::size_t i = 0; i < dhi.size(); ++i)
            h[i] += pm * dhi[i];
        pm *= pz;
        reduce_mod(g, pm);
        reduce_mod(h, pm);
    }
}

bool squarefree_mod(const IPoly& f, std::uint64_t p)
{
    modp::MPoly fm = to_mod(f, p);
    if (modp::degree(fm) != static_cast<int>(f.size()) - 1)
        return false;
    return modp::degree(modp::gcd(fm, modp::derivative(fm, p), p)) == 0;
}

// Irreducible factors (primitive, positive leading coefficient) of a
// primitive squarefree integer polynomial of degree >= 1.
std::vector<Poly> zassenhaus(const Poly& fq)
{
    const IPoly f = to_ipoly(fq);
    const int n = static_cast<int>(f.size()) - 1;
    if (n == 1)
        return {fq};

    // Choose the prime with the fewest modular factors among a few good ones.
    std::uint64_t best_p = 0;
    std::vector<modp::MPoly> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 6 && p < 100000; p = static_cast<std::uint64_t>(next_prime(static_cast<long>(p)))) {
        if (!squarefree_mod(f, p))
            continue;
        ++tried;
        auto fac = modp::factor(to_mod(f, p), p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best.clear();
            for (auto& x : fac)
                best.push_back(x.poly);
        }
        if (best.size() == 1)
            break;
    }
    if (best_p == 0)
        throw std::runtime_error("no good prime found for factorization");
    if (best.size() == 1)
        return {fq};

    const Int lc = f.back();
    // Mignotte-style bound on the coefficients of lc * (monic factor).
    Int norm2 = 0;
    for (const auto& c : f)
        norm2 += c * c;
    Int norm = sqrt(norm2) + 1;
    Int bound = abs(lc) * norm;
    bound <<= n;
    const Int pz(static_cast<unsigned long>(best_p));
    unsigned k = 1;
    Int pk = pz;
    while (pk <= 2 * bound) {
        pk *= pz;
        ++k;
    }

    // Peel one factor at a time.
    std::vector<IPoly> lifted;
    IPoly rest = f;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        IPoly g = from_mod(best[i]);
        modp::MPoly hm = to_mod(rest, best_p);
        hm = modp::quot(hm, best[i], best_p);
        IPoly h = from_mod(hm);
        hensel_two(rest, g, h, best_p, k);
        lifted.push_back(g);
        rest = h;
    }
    {
        // Last factor: the remaining cofactor made monic mod p^k.
        Int inv;
        mpz_invert(inv.get_mpz_t(), Int(rest.back()).get_mpz_t(), pk.get_mpz_t());
        for (auto& c : rest)
            c = mod_floor(Int(c * inv), pk);
        itrim(rest);
        lifted.push_back(rest);
    }

    // Subset recombination.
    std::vector<Poly> out;
    Poly remaining = fq;
    std::vector<IPoly> pool = lifted;
    for (std::size_t size = 1; 2 * size <= pool.size();) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            Int lcr = to_ipoly(remaining).back();
            IPoly prod{lcr};
            for (auto i : idx)
                prod = imul(prod, pool[i]);
            prod = symmetric(prod, pk);
            if (!prod.empty()) {
                Poly cand = to_poly(prod).primitive_part();
                if (cand.degree() > 0 && divides(cand, remaining)) {
                    if (cand.leading() < 0)
                        cand = -cand;
                    out.push_back(cand);
                    remaining = (remaining / cand).primitive_part();
                    std::vector<IPoly> next;
                    for (std::size_t j = 0, t = 0; j < pool.size(); ++j) {
                        if (t < idx.size() && idx[t] == j) {
                            ++t;
                            continue;
                        }
                        next.push_back(pool[j]);
                    }
                    pool = std::move(next);
                    found = true;
                    break;
                }
            }
            // Next combination.
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == pool.size() - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found)
            ++size;
    }
    if (remaining.degree() > 0) {
        if (remaining.leading() < 0)
            remaining = -remaining;
        out.push_back(remaining);
    }
    return out;
}

}  // namespace

Factorization factor_over_Q(const Poly& f)
{
    if (f.is_zero())
        throw std::domain_error("factorization of the zero polynomial");
    Factorization result{f.leading(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        Poly g = part.primitive_part();
        for (const auto& irr : zassenhaus(g))
            result.factors.push_back({irr.monic(), mult});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
    return result;
}

bool is_irreducible_over_Q(const Poly& f)
{
    if (f.degree() <= 0)
        return false;
    auto fac = factor_over_Q(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace k3
