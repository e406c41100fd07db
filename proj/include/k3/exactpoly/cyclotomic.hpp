#pragma once

#include "k3/exactpoly/poly.hpp"

#include <optional>

namespace k3 {

unsigned long euler_phi(unsigned long n);

/// The n-th cyclotomic polynomial (n >= 1).
Poly cyclotomic(unsigned long n);

/// n with f == Phi_n, if any. Searches every n with phi(n) = deg f; all such
/// n satisfy n <= 3 deg(f)^2.
std::optional<unsigned long> is_cyclotomic(const Poly& f);

}  // namespace k3
