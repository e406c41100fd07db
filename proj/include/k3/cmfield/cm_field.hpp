#pragma once

#include "k3/cmfield/number_field.hpp"

#include <stdexcept>
#include <string>

namespace k3 {

/// F = Q(gamma) for a root gamma of a Weil polynomial Q, with its maximal
/// totally real subfield F0 = Q(beta), beta = gamma + 1/gamma.
struct CMData
{
    NumberField F;
    NumberField F0;
    Poly beta_minpoly;
    /// Complex conjugation gamma -> 1/gamma, as a residue mod F.defining.
    Poly conj;
};

/// Thrown when a CM axiom fails; axiom() names it.
class CmAxiomError : public std::domain_error
{
  public:
    CmAxiomError(std::string axiom, const std::string& what)
        : std::domain_error(what), axiom_(std::move(axiom))
    {
    }
    const std::string& axiom() const { return axiom_; }

  private:
    std::string axiom_;
};

/// Axioms checked, in order: "irreducible", "unit_circle" (self-inversive
/// with all beta in (-2, 2)), "totally_imaginary", "totally_real_subfield",
/// "relative_degree", "conjugation".
CMData weil_field(const Poly& Q);

/// Image of a in F under complex conjugation.
Poly conjugate(const CMData& cm, const Poly& a);

Json to_json(const CMData& cm);

}  // namespace k3
