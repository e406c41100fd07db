#include "k3/cmfield/cm_to_k3.hpp"

#include "k3/exactpoly/resultant.hpp"
#include "k3/qform/construct.hpp"
#include "k3/qform/hilbert.hpp"
#include "k3/qform/lattice.hpp"

#include <set>
#include <stdexcept>

namespace k3 {

const QFormInvariants& k3_invariants()
{
    static const QFormInvariants inv = invariants(diagonalize(k3_lattice()));
    return inv;
}

namespace {

PropertyResult verdict(bool ok, std::string detail, Json witness = Json::object())
{
    return {ok ? Verdict::Pass : Verdict::Fail, std::move(detail), std::move(witness)};
}

K3Complement complement(const CMField& k)
{
    K3Complement c;
    const int d = k.d();
    c.q = trace_form(k, find_lambda(k.E0, {1, d - 1}));
    c.lambda_signature = signature_of(c.q.lambda, k.E0);
    c.q_invariants = trace_form_invariants(k, c.q.lambda);
    c.v_invariants = complement_invariants(c.q_invariants, k3_invariants());
    std::string why;
    bool ok = admissible(c.v_invariants, &why);
    c.admissibility = verdict(ok, ok ? "complement invariants are admissible" : why,
                              {{"invariants", to_json(c.v_invariants)}});
    if (!ok)
        return c;
    c.V = construct_with_invariants(c.v_invariants);
    auto total = sum_invariants(c.q_invariants, invariants(*c.V));
    c.sum_check = verdict(total == k3_invariants(), "q_lambda + V has the invariants of Lambda_K3",
                          {{"sum", to_json(total)}, {"k3", to_json(k3_invariants())}});
    return c;
}

}  // namespace

SquareClass relative_delta(const CMField& k)
{
    // disc(E) = disc(E0)^2 N(d_{E/E0}) and (D) = d_{E/E0} times a square ideal.
    const Rat n = norm(k.E0, k.D);
    return square_class(k.d() % 2 ? -n : n);
}

bool BayerReport::holds() const
{
    for (const auto& c : conditions)
        if (c.verdict != Verdict::Pass)
            return false;
    return aux_identity.verdict == Verdict::Pass;
}

bool BayerReport::any_unknown() const
{
    for (const auto& c : conditions)
        if (c.verdict == Verdict::Unknown)
            return true;
    return false;
}

BayerReport bayer_conditions(const CMField& k, const QFormInvariants& W)
{
    const int d = k.d();
    if (W.dim != 2 * d)
        throw std::domain_error("bayer_conditions: W must have dimension 2d");
    BayerReport b;
    b.w_invariants = W;
    b.delta = relative_delta(k);

    b.conditions[0] = verdict(W.r % 2 == 0 && W.s % 2 == 0, "signature of W is (2r, 2s)",
                              {{"signature", {W.r, W.s}}});
    b.conditions[1] = verdict(W.det == b.delta, "det W equals (-1)^d disc(E)",
                              {{"det_W", to_string(W.det)}, {"delta", to_string(b.delta)}});

    // Outside {2}, the primes of delta and the finite Hasse places, W is
    // hyperbolic unless delta is a nonsquare unit at p; then N(D) is not a
    // square in Q_p, so some place above p does not split.
    std::set<Int> bad{Int(2)};
    for (auto& p : prime_support(b.delta.value()))
        bad.insert(p);
    for (const auto& v : W.hasse)
        if (!v.is_infinite())
            bad.insert(v.p());
    Json rows = Json::array();
    bool fail = false, unknown = false;
    for (const auto& p : bad) {
        BayerPrime bp{p, split_test(k.E0, k.D, p), is_hyperbolic_at_p(W, Place::prime(p))};
        if (!bp.hyperbolic) {
            if (bp.split.status == SplitStatus::AllSplit)
                fail = true;
            else if (bp.split.status == SplitStatus::Unknown)
                unknown = true;
        }
        rows.push_back({{"p", p.get_str()},
                        {"split", to_string(bp.split.status)},
                        {"split_reason", bp.split.reason},
                        {"hyperbolic", bp.hyperbolic}});
        b.primes.push_back(std::move(bp));
    }
    b.conditions[2].witness = {{"primes", rows}};
    b.conditions[2].detail = "W is hyperbolic wherever every place of E0 above p splits in E";
    b.conditions[2].verdict = fail ? Verdict::Fail : unknown ? Verdict::Unknown : Verdict::Pass;

    QFormInvariants aux{2, 1, 1, square_class(-b.delta.value()), {}};
    aux.hasse = symbol_support(Rat(-1), b.delta.value());
    auto total = sum_invariants(W, aux);
    b.aux_identity = verdict(total == k3_invariants(), "W + <-1, delta> has the invariants of Lambda_K3",
                             {{"sum", to_json(total)}});
    return b;
}

CmToK3Result cm_to_k3(const CMField& k)
{
    const int d = k.d();
    if (d > 10)
        throw std::domain_error("cm_to_k3: d > 10");
    CmToK3Result r;
    if (d < 10) {
        r.complement = complement(k);
        return r;
    }
    const SquareClass delta = relative_delta(k);
    QFormInvariants aux{2, 1, 1, square_class(-delta.value()), symbol_support(Rat(-1), delta.value())};
    r.bayer = bayer_conditions(k, complement_invariants(aux, k3_invariants()));
    return r;
}

Json to_json(const K3Complement& c)
{
    Json j;
    j["lambda"] = poly_to_json(c.q.lambda);
    j["lambda_signature"] = {c.lambda_signature.first, c.lambda_signature.second};
    j["q_lambda"] = {{"gram", gram_to_json(c.q.gram)}, {"invariants", to_json(c.q_invariants)}};
    j["V"] = {{"invariants", to_json(c.v_invariants)},
              {"admissibility", to_json(c.admissibility)},
              {"diagonal", c.V ? to_json(*c.V)["diagonal"] : Json(nullptr)}};
    j["sum_check"] = to_json(c.sum_check);
    return j;
}

Json to_json(const BayerReport& b)
{
    Json j;
    j["delta"] = to_string(b.delta);
    j["W"] = to_json(b.w_invariants);
    j["condition_1_even_signature"] = to_json(b.conditions[0]);
    j["condition_2_determinant"] = to_json(b.conditions[1]);
    j["condition_3_local_hyperbolic"] = to_json(b.conditions[2]);
    j["aux_identity"] = to_json(b.aux_identity);
    j["lambda"] = "not constructed: existence only";
    return j;
}

}  // namespace k3
