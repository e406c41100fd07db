#include "k3/exactpoly/real_roots.hpp"

#include <stdexcept>

namespace k3 {

SturmChain::SturmChain(const Poly& f)
{
    if (f.is_zero())
        throw std::domain_error("Sturm sequence of the zero polynomial");
    chain_.push_back(squarefree_part(f).primitive_part());
    if (chain_.back().degree() <= 0)
        return;
    chain_.push_back(chain_.back().derivative().primitive_part());
    while (chain_.back().degree() > 0) {
        Poly r = chain_[chain_.size() - 2] % chain_.back();
        if (r.is_zero())
            break;
        chain_.push_back((-r).primitive_part());
    }
}

int SturmChain::variations_at(const Rat& x) const
{
    int changes = 0, last = 0;
    for (const auto& s : chain_) {
        int sg = sign(s(x));
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

int SturmChain::variations_at_infinity(bool positive) const
{
    int changes = 0, last = 0;
    for (const auto& s : chain_) {
        int sg = sign(s.leading());
        if (!positive && s.degree() % 2 == 1)
            sg = -sg;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const
{
    if (lo && hi && *lo >= *hi)
        return 0;
    int vlo = lo ? variations_at(*lo) : variations_at_infinity(false);
    int vhi = hi ? variations_at(*hi) : variations_at_infinity(true);
    return vlo - vhi;
}

int sturm_count(const Poly& f, const Bound& lo, const Bound& hi)
{
    return SturmChain(f).count(lo, hi);
}

Rat root_bound(const Poly& f)
{
    if (f.is_zero())
        throw std::domain_error("root bound of the zero polynomial");
    Rat m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rat r = abs(f.coeff(i) / f.leading());
        if (r > m)
            m = r;
    }
    return m + 1;
}

RootInterval bisect(const SturmChain& chain, const RootInterval& iv)
{
    Rat mid = (iv.lo + iv.hi) / 2;
    if (chain.count(iv.lo, mid) == 1)
        return {iv.lo, mid};
    return {mid, iv.hi};
}

std::vector<RootInterval> isolate_real_roots(const Poly& f)
{
    SturmChain chain(f);
    std::vector<RootInterval> out;
    if (chain.squarefree().degree() <= 0)
        return out;
    Rat b = root_bound(chain.squarefree());
    std::vector<RootInterval> stack{{-b, b}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int n = chain.count(iv.lo, iv.hi);
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }
    return out;
}

namespace {

// Simplest rational in (lo, hi) with 0 <= lo, hi possibly infinite.
Rat simplest_nonneg(const Rat& lo, const std::optional<Rat>& hi)
{
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rat next(fl + 1);
    if (!hi || next < *hi)
        return next;
    // lo and hi lie in [fl, fl + 1]: write x = fl + 1/y.
    Rat frac_lo = lo - Rat(fl), frac_hi = *hi - Rat(fl);
    std::optional<Rat> y_hi;
    if (frac_lo != 0)
        y_hi = 1 / frac_lo;
    Rat y = simplest_nonneg(1 / frac_hi, y_hi);
    return Rat(fl) + 1 / y;
}

}  // namespace

Rat simplest_between(const Rat& lo, const Rat& hi)
{
    if (!(lo < hi))
        throw std::domain_error("simplest_between: empty interval");
    if (lo < 0 && hi > 0)
        return 0;
    if (hi <= 0)
        return -simplest_nonneg(-hi, Rat(-lo));
    return simplest_nonneg(lo, hi);
}

}  // namespace k3
