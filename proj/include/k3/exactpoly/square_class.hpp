#pragma once

#include "k3/exactpoly/arith.hpp"

namespace k3 {

/// Class of a nonzero rational in Q^x / Q^x2: sign * squarefree.
struct SquareClass
{
    int sign = 1;
    Int squarefree = 1;

    Rat value() const { return Rat(squarefree * sign); }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
};

/// Throws std::domain_error for r == 0.
SquareClass square_class(const Rat& r);

std::string to_string(const SquareClass& c);

}  // namespace k3
