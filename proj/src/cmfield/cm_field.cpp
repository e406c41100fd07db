#include "k3/cmfield/cm_field.hpp"

#include "k3/exactpoly/factor.hpp"
#include "k3/exactpoly/real_roots.hpp"
#include "k3/exactpoly/resultant.hpp"

namespace k3 {

CMData weil_field(const Poly& Q)
{
    if (Q.degree() < 1 || !is_irreducible_over_Q(Q))
        throw CmAxiomError("irreducible", "weil_field: Q is not irreducible over Q");
    const Poly f = Q.monic();
    if (f.coeff(0) == 0)
        throw CmAxiomError("unit_circle", "weil_field: Q has the root 0");
    if (f.reversed() * (Rat(1) / f.coeff(0)) != f)
        throw CmAxiomError("unit_circle", "weil_field: Q is not self-inversive");
    if (f.degree() % 2)
        throw CmAxiomError("unit_circle", "weil_field: odd degree");

    CMData cm;
    cm.F = make_number_field(f);
    cm.beta_minpoly = minpoly_of_beta(f);
    if (cm.beta_minpoly(Rat(2)) == 0 || cm.beta_minpoly(Rat(-2)) == 0 ||
        sturm_count(cm.beta_minpoly, Rat(-2), Rat(2)) != cm.beta_minpoly.degree())
        throw CmAxiomError("unit_circle", "weil_field: some gamma + 1/gamma is not real in (-2, 2)");
    if (!cm.F.totally_imaginary())
        throw CmAxiomError("totally_imaginary", "weil_field: F has a real embedding");
    cm.F0 = make_number_field(cm.beta_minpoly);
    if (!cm.F0.totally_real())
        throw CmAxiomError("totally_real_subfield", "weil_field: F0 is not totally real");
    if (2 * cm.F0.degree() != cm.F.degree())
        throw CmAxiomError("relative_degree", "weil_field: [F : F0] != 2");

    // 1/gamma = -(c_1 + c_2 gamma + ... + gamma^(n-1)) / c_0 from f(gamma) = 0.
    std::vector<Rat> lower(f.coefficients().begin() + 1, f.coefficients().end());
    cm.conj = Poly(lower) * (Rat(-1) / f.coeff(0));
    if (!evaluate(cm.F, f, cm.conj).is_zero() ||
        multiply(cm.F, Poly::variable(), cm.conj) != Poly::constant(1))
        throw CmAxiomError("conjugation", "weil_field: gamma -> 1/gamma is not an automorphism");
    return cm;
}

Poly conjugate(const CMData& cm, const Poly& a) { return evaluate(cm.F, a, cm.conj); }

Json to_json(const CMData& cm)
{
    Json j;
    j["F"] = to_json(cm.F);
    j["F0"] = to_json(cm.F0);
    j["beta_minpoly"] = poly_to_json(cm.beta_minpoly);
    j["conj_gamma"] = poly_to_json(cm.conj);
    return j;
}

}  // namespace k3
