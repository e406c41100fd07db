#include "k3/cmfield/cm_to_k3.hpp"
#include "k3/pipeline/run.hpp"
#include "k3/weil/checks.hpp"

namespace k3 {

namespace {

CMField field_from_json(const Json& j)
{
    CMField k;
    k.E = make_number_field(poly_from_json(j.at("E").at("defining")));
    k.conj = poly_from_json(j.at("conj_theta"));
    k.E0 = make_number_field(poly_from_json(j.at("E0").at("defining")));
    k.e0_in_E = poly_from_json(j.at("x0_in_E"));
    k.gamma_in_E = poly_from_json(j.at("gamma_in_E"));
    k.D = poly_from_json(j.at("D"));
    return k;
}

class Validator
{
  public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }
    void same(const Json& recorded, const Json& recomputed, const std::string& what)
    {
        expect(recorded == recomputed, what + " differs from the recomputed value");
    }
    std::vector<std::string> problems;
};

}  // namespace

std::vector<std::string> validate_certificate(const Json& cert)
{
    Validator v;
    try {
        v.expect(cert.at("schema_version") == 1, "schema_version is not 1");
        const std::string status = cert.at("status");
        WeilCandidate c = candidate_from_json(cert.at("input"));
        WeilReport rep = check_all(c);
        Json rj = to_json(rep);
        rj.erase("schema_version");
        rj.erase("kind");
        rj.erase("candidate");
        v.same(cert.at("weil_report"), rj, "weil_report");
        if (status == "Rejected") {
            v.expect(!rep.failures().empty(), "Rejected without a failing property");
            return v.problems;
        }
        v.expect(rep.admissible(), "non-admissible candidate with status " + status);
        if (!rep.admissible())
            return v.problems;

        CMData F = weil_field(*rep.Q);
        Json fj = to_json(F);
        for (auto& [key, val] : fj.items())
            v.same(cert.at("F").at(key), val, "F." + key);
        if (!cert.contains("extension"))
            return v.problems;
        const Json& ext = cert.at("extension");
        if (ext.at("field").is_null()) {
            v.expect(status == "ExistenceOnly", "missing E with status " + status);
            return v.problems;
        }
        CMField E = field_from_json(ext.at("field"));
        v.expect(E.E.degree() == c.degree(), "[E:Q] != deg L");
        v.expect(E.E.totally_imaginary(), "E has a real embedding");
        v.expect(E.E0.totally_real(), "E0 is not totally real");
        v.expect(2 * E.E0.degree() == E.E.degree(), "[E:E0] != 2");
        v.expect(conjugate(E, E.conj) == Poly::variable(), "conjugation is not an involution");
        v.expect(evaluate(E.E, E.E.defining, E.conj).is_zero(), "conj(theta) is not a root");
        v.expect(conjugate(E, E.e0_in_E) == E.e0_in_E, "E0 is not fixed by conjugation");
        v.expect(evaluate(E.E, E.E0.defining, E.e0_in_E).is_zero(), "x0 is not a root of E0");
        v.expect(evaluate(E.E, F.F.defining, E.gamma_in_E).is_zero(), "gamma is not a root of Q");

        PropertyResult comp = completion_degree_check(E, c.p, *rep.h);
        v.same(cert.at("completion_degree"), to_json(comp), "completion_degree");
        if (cert.contains("bayer")) {
            CmToK3Result k3 = cm_to_k3(E);
            v.expect(k3.bayer.has_value(), "Bayer report for d < 10");
            if (k3.bayer)
                v.same(cert.at("bayer"), to_json(*k3.bayer), "bayer");
            return v.problems;
        }
        if (!cert.contains("lambda"))
            return v.problems;

        Poly lambda = poly_from_json(cert.at("lambda"));
        auto sig = signature_of(lambda, E.E0);
        v.same(cert.at("lambda_signature"), Json{sig.first, sig.second}, "lambda_signature");
        v.expect(sig == std::pair{1, E.d() - 1}, "lambda signature is not (1, d-1)");
        TraceForm q = trace_form(E, lambda);
        v.same(cert.at("q_lambda").at("gram"), gram_to_json(q.gram), "q_lambda gram");
        auto qi = trace_form_invariants(E, lambda);
        v.same(cert.at("q_lambda").at("invariants"), to_json(qi), "q_lambda invariants");
        v.same(cert.at("disc_lemma"), to_json(disc_lemma_check(E, q)), "disc_lemma");
        v.same(cert.at("sign_lemma"), to_json(sign_lemma_check(E, q)), "sign_lemma");
        v.expect(cert.at("disc_lemma").at("verdict") == "Pass", "disc_lemma is not Pass");
        v.expect(cert.at("sign_lemma").at("verdict") == "Pass", "sign_lemma is not Pass");
        v.expect(cert.at("completion_degree").at("verdict") == "Pass", "completion_degree is not Pass");

        const Json& V = cert.at("V");
        if (V.at("diagonal").is_null()) {
            v.expect(status != "Constructed", "Constructed without V");
            return v.problems;
        }
        QSpace vs = qspace_from_json(V);
        auto vi = invariants(vs);
        v.same(V.at("invariants"), to_json(vi), "V invariants");
        v.expect(vi == complement_invariants(qi, k3_invariants()), "V is not the complement of q_lambda");
        v.expect(sum_invariants(qi, vi) == k3_invariants(), "q_lambda + V differs from Lambda_K3");
        v.expect(cert.at("sum_check").at("verdict") == "Pass", "sum_check is not Pass");
    } catch (const std::exception& e) {
        v.problems.push_back(std::string("exception: ") + e.what());
    }
    return v.problems;
}

}  // namespace k3
