#pragma once

#include "k3/exactpoly/json_io.hpp"
#include "k3/exactpoly/square_class.hpp"
#include "k3/qform/place.hpp"

#include <set>
#include <vector>

namespace k3 {

/// Symmetric matrix of rationals.
using GramMatrix = std::vector<std::vector<Rat>>;

/// Diagonal representative <a_1, ..., a_n> of a nondegenerate space.
struct QSpace
{
    std::vector<Rat> diagonal;
};

/// Complete invariants of a nondegenerate rational quadratic space.
/// hasse holds the places where the Hasse invariant is nontrivial.
struct QFormInvariants
{
    int dim = 0;
    int r = 0, s = 0;
    SquareClass det;
    std::set<Place> hasse;

    friend bool operator==(const QFormInvariants&, const QFormInvariants&) = default;
};

/// The invariants of the zero space.
QFormInvariants neutral_invariants();

/// Congruence diagonalization. Throws std::domain_error on a degenerate
/// matrix and std::invalid_argument on a non-square or non-symmetric one.
QSpace diagonalize(const GramMatrix& g);

/// Throws std::domain_error if an entry is zero.
QFormInvariants invariants(const QSpace& v);

/// Hasse-Minkowski: equal dimension, signature, determinant and Hasse set.
bool equivalent(const QSpace& v, const QSpace& w);

/// Whether some rational space has these invariants. When false and reason
/// is non-null, *reason names the violated condition.
bool admissible(const QFormInvariants& inv, std::string* reason = nullptr);

/// Invariants of the orthogonal sum.
QFormInvariants sum_invariants(const QFormInvariants& a, const QFormInvariants& b);

/// The X with sum_invariants(sub, X) == whole. Throws std::domain_error if
/// sub does not fit into whole dimensionally.
QFormInvariants complement_invariants(const QFormInvariants& sub, const QFormInvariants& whole);

/// Whether the localization at p looks like dim/2 hyperbolic planes.
/// Throws std::domain_error for odd dimension.
bool is_hyperbolic_at_p(const QFormInvariants& inv, const Place& p);

/// Places where (a, b)_v = -1.
std::set<Place> symbol_support(const Rat& a, const Rat& b);

Json to_json(const QSpace& v);
Json to_json(const QFormInvariants& inv);
QFormInvariants invariants_from_json(const Json& j);
QSpace qspace_from_json(const Json& j);
Json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const Json& j);

}  // namespace k3
