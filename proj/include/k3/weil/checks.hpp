#pragma once

#include "k3/padic/newton_polygon.hpp"
#include "k3/padic/slope_verdict.hpp"
#include "k3/weil/candidate.hpp"

#include <array>
#include <optional>
#include <vector>

namespace k3 {

struct PropertyResult
{
    Verdict verdict = Verdict::Unknown;
    std::string detail;
    Json witness = Json::object();
};

/// (1) every root of L lies on the unit circle.
PropertyResult check_unit_circle(const WeilCandidate& c);

/// (2) no irreducible factor of L is cyclotomic. The witness names n.
PropertyResult check_no_root_of_unity(const WeilCandidate& c);

/// (3) every coefficient has a p-power denominator.
PropertyResult check_l_integrality(const WeilCandidate& c);

struct ShapeResult
{
    PropertyResult result;
    std::optional<int> h, d;
};

/// (4) the polygon has vertices (0,0), (h,-a), (2d-h,-a), (2d,0) with
/// 1 <= h <= d <= 10 (three vertices when h = d).
ShapeResult check_newton_shape(const WeilCandidate& c);

struct PowerResult
{
    PropertyResult result;
    std::optional<Poly> Q;  // normalized with Q(0) = 1
    std::optional<int> e;
    std::optional<SlopeVerdict> slope;
};

/// (5) L = Q^e with Q irreducible over Q and the negative-slope part of Q
/// irreducible over Q_p.
PowerResult check_power_structure(const WeilCandidate& c);

struct WeilReport
{
    WeilCandidate candidate;
    std::array<PropertyResult, 5> properties;
    std::optional<int> h, d, e;
    std::optional<Poly> Q;
    std::optional<SlopeVerdict> slope;

    bool admissible() const;
    /// 1-based indices of failed properties.
    std::vector<int> failures() const;
    bool any_unknown() const;
};

WeilReport check_all(const WeilCandidate& c);

Json to_json(const PropertyResult& r);
Json to_json(const WeilReport& r);

/// L = L_alg * L_trc, where L_alg collects the cyclotomic factors; both
/// normalized to constant term 1. Requires L(0) != 0.
std::pair<Poly, Poly> split_alg_trc(const Poly& L);

}  // namespace k3
