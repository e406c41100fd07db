#pragma once

#include "k3/exactpoly/poly.hpp"

#include <functional>
#include <utility>

namespace k3 {

/// Resultant with the Sylvester-determinant sign convention. Zero if either
/// argument is zero.
Rat resultant(const Poly& f, const Poly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f); requires deg f >= 1.
Rat discriminant(const Poly& f);

/// Res_T(A_w(T), B_w(T)) as a polynomial in w, where specialize(w) returns the
/// pair (A_w, B_w) at a rational w. The result has degree at most
/// degree_bound in w; evaluation points where deg A_w or deg B_w falls below
/// the generic degrees are skipped.
Poly resultant_in_parameter(const std::function<std::pair<Poly, Poly>(const Rat&)>& specialize,
                            int generic_deg_a, int generic_deg_b, int degree_bound);

/// Monic polynomial whose roots (with multiplicity) are psi(alpha) for the
/// roots alpha of p.
Poly compose_roots(const Poly& p, const Poly& psi);

/// Minimal polynomial of gamma + 1/gamma for a root gamma of the irreducible
/// polynomial f with f(0) != 0. Throws std::domain_error otherwise.
Poly minpoly_of_beta(const Poly& f);

}  // namespace k3
