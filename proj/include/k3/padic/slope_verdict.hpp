#pragma once

#include "k3/exactpoly/json_io.hpp"
#include "k3/exactpoly/poly.hpp"

#include <string>

namespace k3 {

enum class SlopeOutcome { Irreducible, Reducible, Unknown, NoNegativeSlope };

std::string to_string(SlopeOutcome o);

struct SlopeVerdict
{
    SlopeOutcome value;
    std::string reason;
    /// Total horizontal length of the negative-slope segments.
    int negative_degree;
};

/// Decides whether the factor of f over Q_p carrying the reciprocal roots of
/// negative valuation is irreducible.
///
/// First order: one negative segment whose residual polynomial is irreducible
/// (or which has no interior lattice point) is irreducible; two or more
/// negative segments, or a residual with two distinct irreducible factors,
/// is reducible.
///
/// When the residual is a proper power psi^j, a second stage maps each root
/// tau on the segment to w = Psi(tau^n / p^m) (Psi a lift of psi), which has
/// positive valuation exactly for those roots. Distinct valuations among them
/// mean reducible; a common valuation mu with lcm(n, den mu) * deg psi equal
/// to the segment length forces irreducibility. Anything else is Unknown.
SlopeVerdict negative_part_verdict(const Poly& f, const Int& p);

Json to_json(const SlopeVerdict& v);

}  // namespace k3
