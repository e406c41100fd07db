#pragma once

#include "k3/exactpoly/json_io.hpp"
#include "k3/exactpoly/modpoly.hpp"
#include "k3/exactpoly/poly.hpp"

#include <optional>
#include <vector>

namespace k3 {

/// p-adic valuation of r; nullopt means +inf (r == 0).
/// Throws std::domain_error if p is not prime.
std::optional<long> vp(const Rat& r, const Int& p);

struct PolygonVertex
{
    int index;
    Rat valuation;
    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonSegment
{
    Rat slope;
    int length;  // horizontal length
    int start;   // index of the left vertex
    int end;
    friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

/// Lower convex hull of the points (i, vp(c_i)) for c_i != 0.
/// A reciprocal root of f lying on a segment of slope s has valuation s.
struct NewtonPolygon
{
    Int prime;
    std::vector<PolygonVertex> vertices;
    std::vector<PolygonSegment> segments;

    /// Sum of the lengths of segments with negative slope.
    int negative_length() const;
    std::vector<PolygonSegment> negative_segments() const;
};

/// Throws std::domain_error on the zero polynomial, f(0) == 0, or composite p.
NewtonPolygon newton_polygon(const Poly& f, const Int& p);

/// Residual polynomial over F_p of a segment with slope a/n in lowest terms:
/// coefficient k is the residue of c_{start + k n} / p^(v_start + k a), or 0
/// when that coefficient lies strictly above the segment. Its roots are the
/// residues of tau^n * p^a for the roots tau of f on the segment.
/// Throws std::domain_error if the segment is not a segment of f's polygon.
modp::MPoly residual_polynomial(const Poly& f, const Int& p, const PolygonSegment& seg);

Json to_json(const NewtonPolygon& np);

}  // namespace k3
