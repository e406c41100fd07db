#pragma once

#include "k3/cmfield/cm_field.hpp"
#include "k3/weil/checks.hpp"

#include <optional>

namespace k3 {

/// A CM field E given absolutely as Q(theta), together with its totally real
/// subfield E0 = Q(x0) and the data the construction needs.
struct CMField
{
    NumberField E;
    /// conj(theta) as a residue mod E.defining.
    Poly conj;
    NumberField E0;
    /// Image of x0 in E.
    Poly e0_in_E;
    /// E = E0(sqrt D), D as a residue mod E0.defining.
    Poly D;
    /// Image of the Weil number gamma in E.
    Poly gamma_in_E;

    int d() const { return E0.degree(); }
};

Poly conjugate(const CMField& k, const Poly& a);
/// Image in E of an element of E0 given as a polynomial in x0.
Poly embed_real(const CMField& k, const Poly& lambda);

/// E = F, theta = gamma.
CMField trivial_extension(const CMData& F);

enum class ExtensionRegime { Trivial, ImaginaryQuadratic, Unsupported };
std::string to_string(ExtensionRegime r);

struct ExtensionResult
{
    ExtensionRegime regime = ExtensionRegime::Unsupported;
    std::optional<CMField> field;  // empty iff Unsupported
    int e = 1;
    Json trace = Json::object();
};

/// A CM extension E of F with [E : Q] = target_degree, in which the place of
/// F0 below the negative-slope place stays unique, and E0 = F0[X]/(P) with P
/// having e real roots. Supported: e = 1, and F imaginary quadratic where P
/// is Eisenstein at p. Throws std::domain_error unless deg F divides
/// target_degree.
ExtensionResult build_extension(const CMData& F, const Int& p, int target_degree);

/// [E_v : Q_p] = expected_h, read off the negative-slope part of the Newton
/// polygon at p of the reversed minimal polynomial of theta.
PropertyResult completion_degree_check(const CMField& k, const Int& p, int expected_h);

Json to_json(const CMField& k);
Json to_json(const ExtensionResult& r);

}  // namespace k3
