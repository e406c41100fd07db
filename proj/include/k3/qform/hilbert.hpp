#pragma once

#include "k3/qform/place.hpp"

#include <vector>

namespace k3 {

/// Hilbert symbol (a, b)_v in {+1, -1}; a, b nonzero.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Whether x != 0 is a square in Q_v.
bool is_local_square(const Rat& x, const Place& v);

/// Primes dividing the numerator or denominator of x.
std::vector<Int> prime_support(const Rat& x);

}  // namespace k3
