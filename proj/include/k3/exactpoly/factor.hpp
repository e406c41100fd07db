#pragma once

#include "k3/exactpoly/poly.hpp"

#include <vector>

namespace k3 {

struct FactorPower
{
    Poly factor;  // monic, irreducible over Q
    int multiplicity;
};

/// f = unit * prod factor^multiplicity, with unit = leading coefficient of f.
struct Factorization
{
    Rat unit;
    std::vector<FactorPower> factors;

    Poly expand() const;
};

/// Factorization over Q into monic irreducibles, ordered by degree and then
/// coefficients. Throws std::domain_error for the zero polynomial.
Factorization factor_over_Q(const Poly& f);

bool is_irreducible_over_Q(const Poly& f);

}  // namespace k3
