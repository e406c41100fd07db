#include "k3/cmfield/number_field.hpp"

#include "k3/exactpoly/factor.hpp"
#include "k3/exactpoly/real_roots.hpp"
#include "k3/exactpoly/resultant.hpp"

#include <stdexcept>

namespace k3 {

NumberField make_number_field(const Poly& f)
{
    if (f.degree() < 1 || !is_irreducible_over_Q(f))
        throw std::domain_error("number field: defining polynomial must be irreducible of degree >= 1");
    NumberField k;
    k.defining = f.monic();
    k.real_embeddings = sturm_count(k.defining);
    return k;
}

Poly reduce(const NumberField& k, const Poly& a) { return a % k.defining; }

Poly multiply(const NumberField& k, const Poly& a, const Poly& b) { return (a * b) % k.defining; }

Poly evaluate(const NumberField& k, const Poly& a, const Poly& at)
{
    const Poly x = reduce(k, at);
    Poly acc;
    for (int i = a.degree(); i >= 0; --i)
        acc = multiply(k, acc, x) + Poly::constant(a.coeff(i));
    return acc;
}

Poly inverse(const NumberField& k, const Poly& a)
{
    Poly r = reduce(k, a);
    if (r.is_zero())
        throw std::domain_error("inverse of zero in a number field");
    auto eg = extended_gcd(r, k.defining);
    return reduce(k, eg.s);
}

Rat trace(const NumberField& k, const Poly& a)
{
    // Newton's identities for the power sums s_0..s_{n-1} of the roots.
    const Poly& f = k.defining;
    const int n = f.degree();
    std::vector<Rat> s(n);
    s[0] = n;
    for (int m = 1; m < n; ++m) {
        Rat acc = -Rat(m) * f.coeff(n - m);
        for (int j = 1; j < m; ++j)
            acc -= f.coeff(n - j) * s[m - j];
        s[m] = acc;
    }
    Poly r = reduce(k, a);
    Rat t = 0;
    for (int i = 0; i <= r.degree(); ++i)
        t += r.coeff(i) * s[i];
    return t;
}

Rat norm(const NumberField& k, const Poly& a)
{
    // N(a) = Res(f, a) for monic f.
    return resultant(k.defining, reduce(k, a));
}

std::pair<int, int> signature_of(const Poly& lambda, const NumberField& k0)
{
    if (!k0.totally_real())
        throw std::domain_error("signature_of: field is not totally real");
    Poly l = reduce(k0, lambda);
    if (l.is_zero())
        throw std::domain_error("signature_of: lambda is zero");
    if (l.is_constant())
        return l.coeff(0) > 0 ? std::pair{k0.degree(), 0} : std::pair{0, k0.degree()};
    SturmChain chain(k0.defining);
    int r = 0, s = 0;
    for (auto iv : isolate_real_roots(k0.defining)) {
        // Shrink until lambda has no root on [lo, hi]; lambda does not vanish
        // at the root itself since the defining polynomial is irreducible.
        while (l(iv.lo) == 0 || sturm_count(l, iv.lo, iv.hi) != 0)
            iv = bisect(chain, iv);
        (l(iv.hi) > 0 ? r : s) += 1;
    }
    return {r, s};
}

Poly find_lambda(const NumberField& k0, std::pair<int, int> target)
{
    auto [r, s] = target;
    if (!k0.totally_real() || r < 0 || s < 0 || r + s != k0.degree())
        throw std::domain_error("find_lambda: target signature does not match the field");
    Poly lambda;
    if (s == 0) {
        lambda = Poly::constant(1);
    } else if (r == 0) {
        lambda = Poly::constant(-1);
    } else {
        // x - m is negative at the s smallest roots when m separates root s
        // from root s + 1.
        SturmChain chain(k0.defining);
        auto ivs = isolate_real_roots(k0.defining);
        RootInterval left = ivs[s - 1], right = ivs[s];
        while (!(left.hi < right.lo)) {
            left = bisect(chain, left);
            right = bisect(chain, right);
        }
        Rat m = simplest_between(left.hi, right.lo);
        lambda = Poly{-m, Rat(1)};
    }
    if (signature_of(lambda, k0) != target)
        throw std::logic_error("find_lambda: verification failed");
    return lambda;
}

Json to_json(const NumberField& k)
{
    Json j;
    j["defining"] = poly_to_json(k.defining);
    j["degree"] = k.degree();
    j["real_embeddings"] = k.real_embeddings;
    return j;
}

}  // namespace k3
