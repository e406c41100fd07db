#pragma once

#include "k3/cmfield/split.hpp"
#include "k3/cmfield/trace_form.hpp"

#include <array>
#include <optional>

namespace k3 {

/// Invariants of the K3 lattice tensored with Q.
const QFormInvariants& k3_invariants();

/// (E, q_lambda) + V = Lambda_K3 for d < 10.
struct K3Complement
{
    TraceForm q;
    std::pair<int, int> lambda_signature;
    QFormInvariants q_invariants;
    QFormInvariants v_invariants;
    PropertyResult admissibility;
    std::optional<QSpace> V;  // empty iff the complement is inadmissible
    PropertyResult sum_check;
};

/// Local data used by condition (3) at one prime.
struct BayerPrime
{
    Int p;
    SplitResult split;
    bool hyperbolic;
};

/// Conditions for a 2d = 20 dimensional W to be some (E, q_lambda):
/// (1) even signature, (2) det W = delta = (-1)^d disc(E), (3) W hyperbolic at
/// every p where all places of E0 above p split in E.
struct BayerReport
{
    SquareClass delta;
    QFormInvariants w_invariants;
    std::array<PropertyResult, 3> conditions;
    std::vector<BayerPrime> primes;
    /// W + <-1, delta> has the invariants of Lambda_K3.
    PropertyResult aux_identity;

    bool holds() const;
    bool any_unknown() const;
};

/// (-1)^d disc(E) in Q^x/Q^x2, computed as (-1)^d N_{E0/Q}(D).
SquareClass relative_delta(const CMField& k);

/// Throws std::domain_error unless W has dimension 2 d.
BayerReport bayer_conditions(const CMField& k, const QFormInvariants& W);

struct CmToK3Result
{
    std::optional<K3Complement> complement;  // d < 10
    std::optional<BayerReport> bayer;        // d = 10
};

/// Throws std::domain_error for d > 10.
CmToK3Result cm_to_k3(const CMField& k);

Json to_json(const K3Complement& c);
Json to_json(const BayerReport& b);

}  // namespace k3
