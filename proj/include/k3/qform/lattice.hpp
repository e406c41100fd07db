#pragma once

#include "k3/qform/invariants.hpp"

namespace k3 {

/// Positive definite E8 root lattice (Cartan matrix).
GramMatrix e8_lattice();

/// The hyperbolic plane U = [[0,1],[1,0]].
GramMatrix hyperbolic_plane();

/// Block diagonal sum.
GramMatrix orthogonal_sum(const GramMatrix& a, const GramMatrix& b);

/// Gram matrix scaled by c.
GramMatrix scaled(const GramMatrix& g, const Rat& c);

/// The K3 lattice (-E8)^2 + U^3, rank 22, signature (3,19).
GramMatrix k3_lattice();

/// Exact determinant by Gaussian elimination over Q.
Rat determinant(const GramMatrix& g);

}  // namespace k3
