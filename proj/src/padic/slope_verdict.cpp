#include "k3/padic/slope_verdict.hpp"

#include "k3/exactpoly/resultant.hpp"
#include "k3/padic/newton_polygon.hpp"

#include <numeric>
#include <sstream>

namespace k3 {

std::string to_string(SlopeOutcome o)
{
    switch (o) {
    case SlopeOutcome::Irreducible:
        return "Irreducible";
    case SlopeOutcome::Reducible:
        return "Reducible";
    case SlopeOutcome::Unknown:
        return "Unknown";
    case SlopeOutcome::NoNegativeSlope:
        return "NoNegativeSlope";
    }
    return "?";
}

namespace {

std::string mp_str(const modp::MPoly& f)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.size(); ++i)
        os << (i ? "," : "") << f[i];
    os << ']';
    return os.str();
}

// Second stage for a residual psi^j. Returns nullopt when inconclusive.
std::optional<SlopeVerdict> refine(const Poly& f, const Int& p, const PolygonSegment& seg,
                                   const modp::MPoly& psi, int j, std::string& note)
{
    const long n = Int(seg.slope.get_den()).get_si();
    const long a = Int(seg.slope.get_num()).get_si();  // slope a/n, a < 0
    Poly lift = modp::lift(psi);
    Rat scale = a >= 0 ? Rat(ipow(p, a)) : Rat(1) / Rat(ipow(p, -a));
    // Psi(T^n * p^a): its value at a segment root is a unit mapped to the
    // maximal ideal.
    Poly inner = Poly::monomial(scale, static_cast<std::size_t>(n));
    Poly w = compose_roots(f, lift.compose(inner));
    if (w.coeff(0) == 0) {
        note = "second stage: Psi(tau^n p^a) vanishes at a root";
        return std::nullopt;
    }
    NewtonPolygon wnp = newton_polygon(w, p);
    auto neg = wnp.negative_segments();
    int total = wnp.negative_length();
    if (total != seg.length) {
        note = "second stage: unexpected positive-valuation count";
        return std::nullopt;
    }
    if (neg.size() >= 2) {
        std::ostringstream os;
        os << "residual is (" << mp_str(psi) << ")^" << j
           << "; second stage finds " << neg.size()
           << " distinct valuations among the negative-part roots";
        return SlopeVerdict{SlopeOutcome::Reducible, os.str(), 0};
    }
    Rat mu = -neg.front().slope;
    Int den = mu.get_den();
    long lcm_e = std::lcm(n, den.get_si());
    long lower = lcm_e * static_cast<long>(modp::degree(psi));
    if (lower == seg.length) {
        std::ostringstream os;
        os << "residual is (" << mp_str(psi) << ")^" << j
           << "; second stage valuation " << to_string(mu) << " forces ramification "
           << lcm_e << " and residue degree " << modp::degree(psi);
        return SlopeVerdict{SlopeOutcome::Irreducible, os.str(), 0};
    }
    std::ostringstream os;
    os << "second stage valuation " << to_string(mu) << " bounds the local degree below by "
       << lower << " < " << seg.length;
    note = os.str();
    return std::nullopt;
}

}  // namespace

SlopeVerdict negative_part_verdict(const Poly& f, const Int& p)
{
    NewtonPolygon np = newton_polygon(f, p);
    auto neg = np.negative_segments();
    const int nd = np.negative_length();
    if (neg.empty())
        return {SlopeOutcome::NoNegativeSlope, "no segment of negative slope", 0};
    if (neg.size() >= 2) {
        std::ostringstream os;
        os << neg.size() << " negative segments";
        return {SlopeOutcome::Reducible, os.str(), nd};
    }
    const auto& seg = neg.front();
    const long n = Int(seg.slope.get_den()).get_si();
    if (seg.length == n)
        return {SlopeOutcome::Irreducible,
                "single negative segment of slope " + to_string(seg.slope) +
                    " with no interior lattice point",
                nd};

    const std::uint64_t pu = p.get_ui();
    modp::MPoly res = residual_polynomial(f, p, seg);
    auto factors = modp::factor(res, pu);
    if (factors.size() >= 2)
        return {SlopeOutcome::Reducible,
                "residual polynomial " + mp_str(res) + " has " + std::to_string(factors.size()) +
                    " distinct irreducible factors",
                nd};
    if (factors.front().multiplicity == 1)
        return {SlopeOutcome::Irreducible,
                "residual polynomial " + mp_str(res) + " is irreducible over F_" + p.get_str(), nd};

    std::string note;
    auto refined = refine(f, p, seg, factors.front().poly, factors.front().multiplicity, note);
    if (refined) {
        refined->negative_degree = nd;
        return *refined;
    }
    return {SlopeOutcome::Unknown,
            "residual polynomial " + mp_str(res) + " is a proper power (" +
                mp_str(factors.front().poly) + ")^" + std::to_string(factors.front().multiplicity) +
                "; " + note,
            nd};
}

Json to_json(const SlopeVerdict& v)
{
    return {{"value", to_string(v.value)}, {"reason", v.reason},
            {"negative_degree", v.negative_degree}};
}

}  // namespace k3
