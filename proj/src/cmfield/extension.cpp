#include "k3/cmfield/extension.hpp"

#include "k3/exactpoly/factor.hpp"
#include "k3/exactpoly/real_roots.hpp"
#include "k3/padic/newton_polygon.hpp"
#include "k3/padic/slope_verdict.hpp"

#include <stdexcept>

namespace k3 {

namespace {

// Q[g, x]/(A(g), B(x)) with A, B monic. Elements are rows indexed by the
// power of g, each row a polynomial in x of degree < deg B.
class Tensor
{
  public:
    using Elem = std::vector<Poly>;

    Tensor(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {}

    int dimension() const { return a_.degree() * b_.degree(); }

    Elem make(const Poly& row0, const Poly& row1 = Poly()) const
    {
        Elem e(a_.degree());
        e[0] = row0 % b_;
        if (a_.degree() > 1)
            e[1] = row1 % b_;
        return e;
    }

    Elem mul(const Elem& u, const Elem& v) const
    {
        const int da = a_.degree();
        Elem w(2 * da - 1);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j)
                w[i + j] += u[i] * v[j];
        for (int i = 2 * da - 2; i >= da; --i) {
            Poly r = w[i] % b_;
            for (int k = 0; k < da; ++k)
                w[i - da + k] -= a_.coeff(k) * r;
            w[i] = Poly();
        }
        w.resize(da);
        for (auto& row : w)
            row = row % b_;
        return w;
    }

    std::vector<Rat> coords(const Elem& u) const
    {
        std::vector<Rat> out;
        for (const auto& row : u)
            for (int j = 0; j < b_.degree(); ++j)
                out.push_back(row.coeff(j));
        return out;
    }

  private:
    Poly a_, b_;
};

// Solves M y = rhs for square M given by columns; nullopt if singular.
std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> cols, std::vector<Rat> rhs)
{
    const std::size_t n = rhs.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = cols[j][i];
        a[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rat> y(n);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = a[i][n] / a[i][i];
    return y;
}

Json eisenstein_witness(const Poly& P, const Int& p)
{
    Json vals = Json::array();
    for (int i = 0; i < P.degree(); ++i) {
        auto v = vp(P.coeff(i), p);
        vals.push_back(v ? Json(*v) : Json("inf"));
    }
    return vals;
}

bool is_eisenstein(const Poly& P, const Int& p)
{
    if (P.leading() != 1)
        return false;
    for (int i = 0; i < P.degree(); ++i) {
        if (!is_integer(P.coeff(i)))
            return false;
        auto v = vp(P.coeff(i), p);
        if (i == 0 ? (!v || *v != 1) : (v && *v < 1))
            return false;
    }
    return true;
}

ExtensionResult imaginary_quadratic(const CMData& F, const Int& p, int e)
{
    const Poly& f = F.F.defining;  // T^2 - b T + 1
    const Rat b = -f.coeff(1);

    // P = prod_{i=1}^{e} (X - p M i) + p u: Eisenstein at p, so irreducible
    // over Q_p; M grows until all e roots are real.
    Poly P;
    long M = 0, u = 0;
    for (long m = 1; m < 1000 && P.is_zero(); ++m)
        for (long uu : {1L, -1L}) {
            Poly cand = Poly::constant(1);
            for (int i = 1; i <= e; ++i)
                cand *= Poly{Rat(-p * m * i), Rat(1)};
            cand += Poly::constant(Rat(p * uu));
            if (sturm_count(cand) == e) {
                P = cand;
                M = m;
                u = uu;
                break;
            }
        }
    if (P.is_zero())
        throw std::runtime_error("build_extension: no totally real Eisenstein polynomial found");
    if (!is_eisenstein(P, p) || sturm_count(P) != e)
        throw std::logic_error("build_extension: P is not a totally real Eisenstein polynomial");

    Tensor alg(f, P);
    const Poly xinv = inverse(make_number_field(P), Poly::variable());
    const int n = alg.dimension();

    for (long c = 0; c < 100; ++c) {
        // theta = gamma / x + c
        auto theta = alg.make(Poly::constant(c), xinv);
        std::vector<std::vector<Rat>> cols;
        auto power = alg.make(Poly::constant(1));
        for (int k = 0; k < n; ++k) {
            cols.push_back(alg.coords(power));
            power = alg.mul(power, theta);
        }
        std::vector<Rat> top = alg.coords(power);
        for (auto& x : top)
            x = -x;
        auto low = solve(cols, top);
        if (!low)
            continue;
        std::vector<Rat> g(low->begin(), low->end());
        g.emplace_back(1);
        Poly minpoly(g);
        if (!is_irreducible_over_Q(minpoly))
            continue;

        auto express = [&](const Tensor::Elem& y) {
            auto coeffs = solve(cols, alg.coords(y));
            if (!coeffs)
                throw std::logic_error("build_extension: theta is not primitive");
            return Poly(*coeffs);
        };
        CMField k;
        k.E = make_number_field(minpoly);
        k.conj = express(alg.make(Poly::constant(c) + Poly::constant(b) * xinv, -xinv));
        k.E0 = make_number_field(P);
        k.e0_in_E = express(alg.make(Poly::variable()));
        k.gamma_in_E = express(alg.make(Poly(), Poly::constant(1)));
        k.D = multiply(k.E0, Poly::constant(b * b - 4), multiply(k.E0, xinv, xinv));

        ExtensionResult r;
        r.regime = ExtensionRegime::ImaginaryQuadratic;
        r.e = e;
        r.trace = {{"regime", to_string(r.regime)},
                   {"P", poly_to_json(P)},
                   {"M", M},
                   {"u", u},
                   {"real_roots", sturm_count(P)},
                   {"eisenstein_prime", p.get_str()},
                   {"eisenstein_valuations", eisenstein_witness(P, p)},
                   {"theta", "gamma/x + " + std::to_string(c)},
                   {"c", c}};
        r.field = std::move(k);
        return r;
    }
    throw std::runtime_error("build_extension: no primitive element found");
}

}  // namespace

Poly conjugate(const CMField& k, const Poly& a) { return evaluate(k.E, a, k.conj); }

Poly embed_real(const CMField& k, const Poly& lambda)
{
    return evaluate(k.E, reduce(k.E0, lambda), k.e0_in_E);
}

CMField trivial_extension(const CMData& F)
{
    CMField k;
    k.E = F.F;
    k.conj = F.conj;
    k.E0 = F.F0;
    k.e0_in_E = reduce(F.F, Poly::variable() + F.conj);
    k.D = reduce(F.F0, Poly{Rat(-4), Rat(0), Rat(1)});
    k.gamma_in_E = reduce(F.F, Poly::variable());
    return k;
}

std::string to_string(ExtensionRegime r)
{
    switch (r) {
    case ExtensionRegime::Trivial:
        return "trivial";
    case ExtensionRegime::ImaginaryQuadratic:
        return "imaginary_quadratic";
    case ExtensionRegime::Unsupported:
        return "unsupported";
    }
    return "?";
}

ExtensionResult build_extension(const CMData& F, const Int& p, int target_degree)
{
    const int n = F.F.degree();
    if (target_degree < n || target_degree % n)
        throw std::domain_error("build_extension: [F:Q] does not divide the target degree");
    const int e = target_degree / n;
    ExtensionResult r;
    r.e = e;
    if (e == 1) {
        r.regime = ExtensionRegime::Trivial;
        r.field = trivial_extension(F);
        r.trace = {{"regime", to_string(r.regime)}, {"theta", "gamma"}};
        return r;
    }
    if (F.F0.degree() == 1)
        return imaginary_quadratic(F, p, e);
    r.regime = ExtensionRegime::Unsupported;
    r.trace = {{"regime", to_string(r.regime)}, {"reason", "general F0 unsupported"}};
    return r;
}

PropertyResult completion_degree_check(const CMField& k, const Int& p, int expected_h)
{
    PropertyResult r;
    const Poly rev = k.E.defining.reversed();
    NewtonPolygon np = newton_polygon(rev, p);
    SlopeVerdict sv = negative_part_verdict(rev, p);
    const int length = np.negative_length();
    r.witness = {{"polygon", to_json(np)},
                 {"negative_length", length},
                 {"expected_h", expected_h},
                 {"slope_verdict", to_json(sv)}};
    if (length != expected_h) {
        r.verdict = Verdict::Fail;
        r.detail = "negative-slope length " + std::to_string(length) + " differs from h = " +
                   std::to_string(expected_h);
    } else if (sv.value == SlopeOutcome::Irreducible) {
        r.verdict = Verdict::Pass;
        r.detail = "[E_v:Q_p] = " + std::to_string(expected_h);
    } else if (sv.value == SlopeOutcome::Reducible) {
        r.verdict = Verdict::Fail;
        r.detail = "several places above p on the negative part";
    } else {
        r.verdict = Verdict::Unknown;
        r.detail = sv.reason;
    }
    return r;
}

Json to_json(const CMField& k)
{
    Json j;
    j["E"] = to_json(k.E);
    j["conj_theta"] = poly_to_json(k.conj);
    j["E0"] = to_json(k.E0);
    j["x0_in_E"] = poly_to_json(k.e0_in_E);
    j["gamma_in_E"] = poly_to_json(k.gamma_in_E);
    j["D"] = poly_to_json(k.D);
    return j;
}

Json to_json(const ExtensionResult& r)
{
    Json j;
    j["regime"] = to_string(r.regime);
    j["e"] = r.e;
    j["trace"] = r.trace;
    j["field"] = r.field ? to_json(*r.field) : Json(nullptr);
    return j;
}

}  // namespace k3
