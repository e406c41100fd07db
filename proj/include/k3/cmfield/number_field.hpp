#pragma once

#include "k3/exactpoly/json_io.hpp"
#include "k3/exactpoly/poly.hpp"

#include <utility>

namespace k3 {

/// Q[x]/(defining) with defining monic irreducible. Elements are residues,
/// i.e. polynomials of degree below the field degree.
struct NumberField
{
    Poly defining;
    int real_embeddings = 0;

    int degree() const { return defining.degree(); }
    bool totally_real() const { return real_embeddings == degree(); }
    bool totally_imaginary() const { return real_embeddings == 0; }
};

/// Normalizes f to monic and counts real embeddings. Throws
/// std::domain_error unless f is irreducible over Q of degree >= 1.
NumberField make_number_field(const Poly& f);

Poly reduce(const NumberField& k, const Poly& a);
Poly multiply(const NumberField& k, const Poly& a, const Poly& b);
/// a(at) reduced in k, by Horner's rule with reduction at every step.
Poly evaluate(const NumberField& k, const Poly& a, const Poly& at);
/// Throws std::domain_error for zero.
Poly inverse(const NumberField& k, const Poly& a);
/// Absolute trace Tr_{K/Q}.
Rat trace(const NumberField& k, const Poly& a);
/// Absolute norm N_{K/Q}.
Rat norm(const NumberField& k, const Poly& a);

/// Numbers (r, s) of real embeddings where lambda is positive / negative.
/// Requires a totally real field; throws std::domain_error if lambda is zero
/// in the field.
std::pair<int, int> signature_of(const Poly& lambda, const NumberField& k0);

/// Deterministic lambda = +-1 or +-(x - m) with signature_of(lambda) = target.
/// Throws std::domain_error unless k0 is totally real and r + s = degree.
Poly find_lambda(const NumberField& k0, std::pair<int, int> target);

Json to_json(const NumberField& k);

}  // namespace k3
