#include "k3/exactpoly/resultant.hpp"

#include "k3/exactpoly/factor.hpp"

#include <stdexcept>
#include <vector>

namespace k3 {

Rat resultant(const Poly& f0, const Poly& g0)
{
    if (f0.is_zero() || g0.is_zero())
        return 0;
    Poly f = f0, g = g0;
    Rat acc = 1;
    for (;;) {
        const int m = f.degree(), n = g.degree();
        if (n == 0)
            return acc * rpow(g.leading(), static_cast<unsigned long>(m));
        if (m == 0)
            return acc * rpow(f.leading(), static_cast<unsigned long>(n));
        if (m < n) {
            if ((m * n) % 2)
                acc = -acc;
            std::swap(f, g);
            continue;
        }
        // Res(f, g) = (-1)^(mn) lc(g)^(m-k) Res(g, f mod g).
        Poly r = f % g;
        if (r.is_zero())
            return 0;
        const int k = r.degree();
        if ((m * n) % 2)
            acc = -acc;
        acc *= rpow(g.leading(), static_cast<unsigned long>(m - k));
        f = std::move(g);
        g = std::move(r);
    }
}

Rat discriminant(const Poly& f)
{
    const int n = f.degree();
    if (n < 1)
        throw std::domain_error("discriminant of a constant polynomial");
    Rat r = resultant(f, f.derivative()) / f.leading();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2)
        r = -r;
    return r;
}

Poly resultant_in_parameter(const std::function<std::pair<Poly, Poly>(const Rat&)>& specialize,
                            int generic_deg_a, int generic_deg_b, int degree_bound)
{
    std::vector<Rat> xs, ys;
    const int needed = degree_bound + 1;
    for (long w = 0; static_cast<int>(xs.size()) < needed; ++w) {
        // Alternate 0, 1, -1, 2, -2, ... to keep evaluation points small.
        long pt = (w % 2) ? (w + 1) / 2 : -(w / 2);
        if (w > 64L * needed + 256)
            throw std::runtime_error("resultant_in_parameter: too many degenerate points");
        auto [a, b] = specialize(Rat(pt));
        if (a.degree() != generic_deg_a || b.degree() != generic_deg_b)
            continue;
        xs.emplace_back(pt);
        ys.push_back(resultant(a, b));
    }
    return interpolate(xs, ys);
}

Poly compose_roots(const Poly& p, const Poly& psi)
{
    if (p.degree() < 1)
        throw std::domain_error("compose_roots needs a non-constant polynomial");
    const int n = p.degree();
    if (psi.degree() <= 0)
        return Poly{-psi.coeff(0), 1}.pow(static_cast<unsigned>(n));
    // Res_T(p(T), w - psi(T)) = lc(p)^deg(psi) * prod (w - psi(alpha)).
    auto spec = [&](const Rat& w) { return std::make_pair(p, Poly::constant(w) - psi); };
    Poly r = resultant_in_parameter(spec, n, psi.degree(), n);
    return r.monic();
}

Poly minpoly_of_beta(const Poly& f)
{
    if (f.degree() < 1 || f.coeff(0) == 0)
        throw std::domain_error("minpoly_of_beta needs f(0) != 0 and deg f >= 1");
    if (!is_irreducible_over_Q(f))
        throw std::domain_error("minpoly_of_beta needs an irreducible polynomial");
    const int n = f.degree();
    // Res_T(f(T), T^2 - x T + 1) vanishes exactly at x = gamma + 1/gamma.
    auto spec = [&](const Rat& x) { return std::make_pair(f, Poly{1, -x, 1}); };
    Poly r = resultant_in_parameter(spec, n, 2, n);
    return squarefree_part(r);
}

}  // namespace k3
