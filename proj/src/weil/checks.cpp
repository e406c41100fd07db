#include "k3/weil/checks.hpp"

#include "k3/exactpoly/cyclotomic.hpp"
#include "k3/exactpoly/factor.hpp"
#include "k3/exactpoly/real_roots.hpp"

namespace k3 {

namespace {

PropertyResult pass(std::string detail, Json witness = Json::object())
{
    return {Verdict::Pass, std::move(detail), std::move(witness)};
}

PropertyResult fail(std::string detail, Json witness)
{
    return {Verdict::Fail, std::move(detail), std::move(witness)};
}

// H with T^d * H(T + 1/T) = L for a self-inversive L of degree 2d.
Poly dickson_reduction(const Poly& L)
{
    const int d = L.degree() / 2;
    Poly x = Poly::variable();
    Poly prev = Poly::constant(2), cur = x;
    Poly H = Poly::constant(L.coeff(d));
    for (int k = 1; k <= d; ++k) {
        H += cur * L.coeff(d + k);
        Poly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return H;
}

Json vertices_json(const NewtonPolygon& np) { return to_json(np)["vertices"]; }

}  // namespace

PropertyResult check_unit_circle(const WeilCandidate& c)
{
    const Poly& L = c.L;
    Poly rev = L.reversed();
    if (rev == -L)
        return fail("L is anti-self-inversive, so L(1) = 0 and 1 is a reciprocal root",
                    {{"reason", "anti_self_inversive"}, {"root", "1"}});
    if (rev != L) {
        for (int i = 0; i <= L.degree(); ++i)
            if (L.coeff(i) != L.coeff(L.degree() - i))
                return fail("L is not self-inversive",
                            {{"reason", "not_self_inversive"},
                             {"index", i},
                             {"coefficient", rat_to_json(L.coeff(i))},
                             {"mirror_coefficient", rat_to_json(L.coeff(L.degree() - i))}});
    }
    Poly H = dickson_reduction(L);
    SturmChain chain(H);
    const int distinct = chain.squarefree().degree();
    int inside = chain.count(Rat(-2), Rat(2)) + (H(Rat(-2)) == 0 ? 1 : 0);
    Json w{{"H", poly_to_json(H)}, {"distinct_roots", distinct}, {"roots_in_interval", inside}};
    if (inside == distinct)
        return pass("all roots of H lie in [-2, 2]", w);
    w["reason"] = "root_outside_interval";
    return fail("H has a root outside [-2, 2] or a non-real root", w);
}

PropertyResult check_no_root_of_unity(const WeilCandidate& c)
{
    auto fac = factor_over_Q(c.L);
    for (const auto& fp : fac.factors)
        if (auto n = is_cyclotomic(fp.factor))
            return fail("L has the cyclotomic factor Phi_" + std::to_string(*n),
                        {{"cyclotomic_index", *n}, {"factor", poly_to_json(fp.factor)}});
    return pass("no irreducible factor is cyclotomic");
}

PropertyResult check_l_integrality(const WeilCandidate& c)
{
    for (int i = 0; i <= c.L.degree(); ++i) {
        Int den = c.L.coeff(i).get_den();
        while (mpz_divisible_p(den.get_mpz_t(), c.p.get_mpz_t()))
            den /= c.p;
        if (den != 1)
            return fail("coefficient " + std::to_string(i) + " has a denominator prime to p",
                        {{"index", i}, {"coefficient", rat_to_json(c.L.coeff(i))}});
    }
    return pass("all denominators are powers of p");
}

ShapeResult check_newton_shape(const WeilCandidate& c)
{
    NewtonPolygon np = newton_polygon(c.L, c.p);
    const int two_d = c.L.degree();
    const int d = two_d / 2;
    const Rat minus_a(-c.a);
    const auto& v = np.vertices;
    Json w{{"vertices", vertices_json(np)}};

    auto bad = [&](const std::string& why, Json extra) {
        for (auto& [k, val] : extra.items())
            w[k] = val;
        w["reason"] = why;
        return ShapeResult{fail("Newton polygon has the wrong shape: " + why, w), {}, {}};
    };

    if (v.size() < 3)
        return bad("no_negative_segment", Json::object());
    if (v.front() != PolygonVertex{0, Rat(0)})
        return bad("first_vertex", {{"vertex", vertices_json(np)[0]}});
    if (v.back() != PolygonVertex{two_d, Rat(0)})
        return bad("last_vertex", {{"vertex", vertices_json(np).back()}});
    const int h = v[1].index;
    if (v[1].valuation != minus_a)
        return bad("second_vertex_valuation", {{"vertex", vertices_json(np)[1]}});
    if (h > d)
        return bad("height_exceeds_d", {{"vertex", vertices_json(np)[1]}});
    if (h == d) {
        if (v.size() != 3)
            return bad("extra_vertex", {{"vertex", vertices_json(np)[2]}});
    } else {
        if (v.size() != 4)
            return bad("vertex_count", {{"vertex_count", v.size()}});
        if (v[2] != PolygonVertex{two_d - h, minus_a})
            return bad("third_vertex", {{"vertex", vertices_json(np)[2]}});
    }
    if (d > 10)
        return bad("d_exceeds_10", {{"d", d}});
    w["h"] = h;
    w["d"] = d;
    return {pass("polygon has the required shape", w), h, d};
}

PowerResult check_power_structure(const WeilCandidate& c)
{
    auto fac = factor_over_Q(c.L);
    PowerResult out;
    if (fac.factors.size() != 1) {
        Json fs = Json::array();
        for (const auto& fp : fac.factors)
            fs.push_back({{"factor", poly_to_json(fp.factor)}, {"multiplicity", fp.multiplicity}});
        out.result = fail("L has " + std::to_string(fac.factors.size()) +
                              " distinct irreducible factors over Q",
                          {{"reason", "several_factors"}, {"factors", fs}});
        return out;
    }
    const Poly& monic_q = fac.factors[0].factor;
    Poly Q = monic_q * (1 / monic_q.coeff(0));
    out.Q = Q;
    out.e = fac.factors[0].multiplicity;
    SlopeVerdict sv = negative_part_verdict(Q, c.p);
    out.slope = sv;
    Json w{{"Q", poly_to_json(Q)}, {"e", *out.e}, {"slope_verdict", to_json(sv)}};
    switch (sv.value) {
    case SlopeOutcome::Irreducible:
        out.result = pass("L = Q^e with the negative part of Q irreducible over Q_p", w);
        break;
    case SlopeOutcome::Unknown:
        out.result = {Verdict::Unknown, "p-adic irreducibility undecided: " + sv.reason, w};
        break;
    case SlopeOutcome::Reducible:
        w["reason"] = "negative_part_reducible";
        out.result = fail("the negative part of Q splits over Q_p: " + sv.reason, w);
        break;
    case SlopeOutcome::NoNegativeSlope:
        w["reason"] = "no_negative_slope";
        out.result = fail("Q has no negative slope", w);
        break;
    }
    return out;
}

bool WeilReport::admissible() const
{
    for (const auto& p : properties)
        if (p.verdict != Verdict::Pass)
            return false;
    return true;
}

std::vector<int> WeilReport::failures() const
{
    std::vector<int> out;
    for (int i = 0; i < 5; ++i)
        if (properties[i].verdict == Verdict::Fail)
            out.push_back(i + 1);
    return out;
}

bool WeilReport::any_unknown() const
{
    for (const auto& p : properties)
        if (p.verdict == Verdict::Unknown)
            return true;
    return false;
}

WeilReport check_all(const WeilCandidate& c)
{
    validate(c);
    WeilReport r;
    r.candidate = c;
    r.properties[0] = check_unit_circle(c);
    r.properties[1] = check_no_root_of_unity(c);
    r.properties[2] = check_l_integrality(c);
    auto shape = check_newton_shape(c);
    r.properties[3] = shape.result;
    r.h = shape.h;
    r.d = shape.d;
    auto power = check_power_structure(c);
    r.properties[4] = power.result;
    r.Q = power.Q;
    r.e = power.e;
    r.slope = power.slope;
    return r;
}

Json to_json(const PropertyResult& r)
{
    return {{"verdict", to_string(r.verdict)}, {"detail", r.detail}, {"witness", r.witness}};
}

Json to_json(const WeilReport& r)
{
    Json j;
    j["schema_version"] = 1;
    j["kind"] = "weil_report";
    j["candidate"] = to_json(r.candidate);
    j["admissible"] = r.admissible();
    Json props = Json::object();
    static const char* names[5] = {"p1_unit_circle", "p2_no_root_of_unity", "p3_l_integrality",
                                   "p4_newton_shape", "p5_power_structure"};
    for (int i = 0; i < 5; ++i)
        props[names[i]] = to_json(r.properties[i]);
    j["properties"] = props;
    j["failures"] = r.failures();
    j["h"] = r.h ? Json(*r.h) : Json(nullptr);
    j["d"] = r.d ? Json(*r.d) : Json(nullptr);
    j["e"] = r.e ? Json(*r.e) : Json(nullptr);
    j["Q"] = r.Q ? poly_to_json(*r.Q) : Json(nullptr);
    return j;
}

std::pair<Poly, Poly> split_alg_trc(const Poly& L)
{
    if (L.is_zero() || L.coeff(0) == 0)
        throw std::domain_error("split_alg_trc needs L(0) != 0");
    auto fac = factor_over_Q(L);
    Poly alg = Poly::constant(1), trc = Poly::constant(1);
    for (const auto& fp : fac.factors) {
        Poly part = fp.factor.pow(static_cast<unsigned>(fp.multiplicity));
        if (is_cyclotomic(fp.factor))
            alg *= part;
        else
            trc *= part;
    }
    alg = alg * (1 / alg.coeff(0));
    trc = L / alg;
    return {alg, trc};
}

}  // namespace k3
