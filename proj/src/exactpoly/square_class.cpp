#include "k3/exactpoly/square_class.hpp"

#include <stdexcept>

namespace k3 {

SquareClass square_class(const Rat& r)
{
    if (r == 0)
        throw std::domain_error("square class of zero");
    // num/den ~ num*den modulo squares.
    Int prod = abs(Int(r.get_num() * r.get_den()));
    return {sign(r), squarefree_part(prod)};
}

SquareClass operator*(const SquareClass& a, const SquareClass& b)
{
    Int g = gcd(a.squarefree, b.squarefree);
    return {a.sign * b.sign, (a.squarefree / g) * (b.squarefree / g)};
}

std::string to_string(const SquareClass& c)
{
    return to_string(Int(c.squarefree * c.sign));
}

}  // namespace k3
