#pragma once

#include "k3/cmfield/extension.hpp"
#include "k3/qform/invariants.hpp"

namespace k3 {

/// q_lambda(x, y) = Tr_{E/Q}(lambda x conj(y)) on the power basis of theta.
struct TraceForm
{
    GramMatrix gram;
    Poly lambda;  // in E0, as a polynomial in x0
};

/// Throws std::domain_error if lambda is zero in E0.
TraceForm trace_form(const CMField& k, const Poly& lambda);

/// Same, for lambda given as an element of E; throws std::domain_error unless
/// lambda is nonzero and fixed by conjugation.
GramMatrix trace_form_of_element(const CMField& k, const Poly& lambda_in_E);

/// Invariants of q_lambda from E = E0 + E0 eta with eta^2 = D, conj(eta) = -eta:
/// q_lambda is isometric to Tr_{E0/Q}(2 lambda x y) + Tr_{E0/Q}(-2 lambda D x y).
QFormInvariants trace_form_invariants(const CMField& k, const Poly& lambda);

/// det(q_lambda) against (-1)^d disc(E.defining), compared as square classes.
/// NotApplicable if the defining polynomial is not squarefree.
PropertyResult disc_lemma_check(const CMField& k, const Poly& lambda);
PropertyResult disc_lemma_check(const CMField& k, const TraceForm& q);

/// signature_of(lambda) = (r, s) implies q_lambda has signature (2r, 2s).
PropertyResult sign_lemma_check(const CMField& k, const Poly& lambda);
PropertyResult sign_lemma_check(const CMField& k, const TraceForm& q);

Json to_json(const TraceForm& t);

}  // namespace k3
