#include "k3/weil/base_extend.hpp"

#include "k3/exactpoly/resultant.hpp"

#include <stdexcept>

namespace k3 {

WeilCandidate base_extend(const WeilCandidate& c, unsigned n)
{
    if (n == 0)
        throw std::domain_error("base_extend: n must be positive");
    validate(c);
    if (n == 1)
        return c;
    // reversed(L) is monic with roots gamma_i.
    Poly roots_n = compose_roots(c.L.reversed(), Poly::monomial(1, n));
    return {roots_n.reversed(), c.p, c.a * static_cast<long>(n)};
}

}  // namespace k3
