#include "k3/padic/newton_polygon.hpp"

#include <stdexcept>

namespace k3 {

std::optional<long> vp(const Rat& r, const Int& p)
{
    if (!is_prime(p))
        throw std::domain_error("vp: " + p.get_str() + " is not prime");
    if (r == 0)
        return std::nullopt;
    long v = 0;
    Int num = r.get_num(), den = r.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        --v;
    }
    return v;
}

int NewtonPolygon::negative_length() const
{
    int n = 0;
    for (const auto& s : segments)
        if (s.slope < 0)
            n += s.length;
    return n;
}

std::vector<PolygonSegment> NewtonPolygon::negative_segments() const
{
    std::vector<PolygonSegment> out;
    for (const auto& s : segments)
        if (s.slope < 0)
            out.push_back(s);
    return out;
}

NewtonPolygon newton_polygon(const Poly& f, const Int& p)
{
    if (f.is_zero())
        throw std::domain_error("Newton polygon of the zero polynomial");
    if (f.coeff(0) == 0)
        throw std::domain_error("Newton polygon needs a nonzero constant term");
    if (!is_prime(p))
        throw std::domain_error("Newton polygon: " + p.get_str() + " is not prime");

    std::vector<PolygonVertex> pts;
    for (int i = 0; i <= f.degree(); ++i)
        if (auto v = vp(f.coeff(i), p))
            pts.push_back({i, Rat(*v)});

    // Lower hull by the monotone chain; points are already sorted by index.
    std::vector<PolygonVertex> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b unless it lies strictly below the line a -> pt.
            Rat cross = (b.valuation - a.valuation) * (pt.index - a.index) -
                        (pt.valuation - a.valuation) * (b.index - a.index);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    NewtonPolygon np{p, hull, {}};
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        int len = hull[i + 1].index - hull[i].index;
        np.segments.push_back({(hull[i + 1].valuation - hull[i].valuation) / len, len,
                               hull[i].index, hull[i + 1].index});
    }
    return np;
}

modp::MPoly residual_polynomial(const Poly& f, const Int& p, const PolygonSegment& seg)
{
    NewtonPolygon np = newton_polygon(f, p);
    bool found = false;
    for (const auto& s : np.segments)
        found = found || s == seg;
    if (!found)
        throw std::domain_error("residual_polynomial: segment does not belong to the polygon");
    if (!p.fits_ulong_p() || p > 0xffffffffUL)
        throw std::domain_error("residual_polynomial: prime too large");

    const long n = Int(seg.slope.get_den()).get_si();
    const long a = Int(seg.slope.get_num()).get_si();
    const long v0 = *vp(f.coeff(seg.start), p);
    const std::uint64_t pu = p.get_ui();
    modp::MPoly r;
    for (long k = 0; seg.start + k * n <= seg.end; ++k) {
        const Rat& c = f.coeff(seg.start + k * n);
        auto v = vp(c, p);
        if (!v || *v != v0 + k * a) {
            r.push_back(0);
            continue;
        }
        Rat unit = c / (*v >= 0 ? Rat(ipow(p, *v)) : Rat(1) / Rat(ipow(p, -*v)));
        r.push_back(mod_floor(unit, p).get_ui() % pu);
    }
    modp::trim(r);
    return r;
}

Json to_json(const NewtonPolygon& np)
{
    Json j;
    j["prime"] = std::stol(np.prime.get_str());
    Json verts = Json::array();
    for (const auto& v : np.vertices)
        verts.push_back(Json::array({v.index, rat_to_json(v.valuation)}));
    j["vertices"] = verts;
    Json segs = Json::array();
    for (const auto& s : np.segments)
        segs.push_back({{"slope", rat_to_json(s.slope)}, {"length", s.length}});
    j["segments"] = segs;
    return j;
}

}  // namespace k3
