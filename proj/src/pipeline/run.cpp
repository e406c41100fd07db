#include "k3/pipeline/run.hpp"

#include "k3/cmfield/cm_to_k3.hpp"
#include "k3/exactpoly/resultant.hpp"
#include "k3/exactpoly/square_class.hpp"
#include "k3/weil/checks.hpp"

#include <chrono>

namespace k3 {

namespace {

constexpr const char* kBaseChange = "unresolved: geometric step out of scope";

class Stopwatch
{
  public:
    explicit Stopwatch(Json& sink) : sink_(sink), last_(clock::now()) {}
    void lap(const char* stage)
    {
        auto now = clock::now();
        sink_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
    }

  private:
    using clock = std::chrono::steady_clock;
    Json& sink_;
    clock::time_point last_;
};

RunOutcome finish(RunOutcome out, RunStatus status, const std::string& reason)
{
    out.status = status;
    out.certificate["status"] = to_string(status);
    out.certificate["reason"] = reason;
    out.certificate["base_change_exponent"] = kBaseChange;
    return out;
}

}  // namespace

std::string to_string(RunStatus s)
{
    switch (s) {
    case RunStatus::Constructed:
        return "Constructed";
    case RunStatus::ExistenceOnly:
        return "ExistenceOnly";
    case RunStatus::Rejected:
        return "Rejected";
    case RunStatus::Unknown:
        return "Unknown";
    }
    return "?";
}

int exit_code(RunStatus s)
{
    switch (s) {
    case RunStatus::Constructed:
    case RunStatus::ExistenceOnly:
        return 0;
    case RunStatus::Rejected:
        return 1;
    case RunStatus::Unknown:
        return 2;
    }
    return 2;
}

RunOutcome run(const WeilCandidate& c, const PipelineConfig& config)
{
    validate(c);
    RunOutcome out;
    Stopwatch watch(out.telemetry);
    Json& cert = out.certificate;
    cert["schema_version"] = 1;
    cert["kind"] = "certificate";
    cert["status"] = nullptr;
    cert["reason"] = nullptr;
    cert["input"] = to_json(c);

    WeilReport rep = check_all(c);
    watch.lap("check_all");
    Json rj = to_json(rep);
    rj.erase("schema_version");
    rj.erase("kind");
    rj.erase("candidate");
    cert["weil_report"] = rj;
    if (!rep.failures().empty()) {
        std::string which;
        for (int i : rep.failures())
            which += (which.empty() ? "" : ", ") + std::to_string(i);
        return finish(std::move(out), RunStatus::Rejected, "failed properties: " + which);
    }
    if (rep.any_unknown() || !rep.admissible())
        return finish(std::move(out), RunStatus::Unknown, "some property is undecided");

    const int h = *rep.h, d = *rep.d;
    CMData F;
    try {
        F = weil_field(*rep.Q);
    } catch (const CmAxiomError& e) {
        cert["F"] = {{"error", e.what()}, {"axiom", e.axiom()}};
        return finish(std::move(out), RunStatus::Unknown, "CM axiom failed: " + e.axiom());
    }
    cert["F"] = to_json(F);
    cert["F"]["F0_discriminant_class"] =
        F.F0.degree() >= 2 ? Json(to_string(square_class(discriminant(F.F0.defining)))) : Json(nullptr);
    watch.lap("weil_field");

    const int target = 2 * d;
    if (target > config.max_extension_degree)
        return finish(std::move(out), RunStatus::Unknown, "[E:Q] exceeds max_extension_degree");
    ExtensionResult ext = build_extension(F, c.p, target);
    cert["extension"] = to_json(ext);
    watch.lap("build_extension");
    if (!ext.field)
        return finish(std::move(out), RunStatus::ExistenceOnly,
                      "E exists but its construction is unsupported: " + ext.trace.value("reason", ""));
    const CMField& E = *ext.field;

    PropertyResult comp = completion_degree_check(E, c.p, h);
    cert["completion_degree"] = to_json(comp);
    watch.lap("completion_degree");
    if (comp.verdict != Verdict::Pass)
        return finish(std::move(out), RunStatus::Unknown, "[E_v:Q_p] = h not certified");

    CmToK3Result k3;
    try {
        k3 = cm_to_k3(E);
    } catch (const FactorizationLimit& e) {
        cert["cm_to_k3"] = {{"error", e.what()}};
        return finish(std::move(out), RunStatus::Unknown, "local invariants need a factorization beyond the effort bound");
    }
    watch.lap("cm_to_k3");
    if (k3.bayer) {
        cert["bayer"] = to_json(*k3.bayer);
        if (k3.bayer->holds())
            return finish(std::move(out), RunStatus::ExistenceOnly, "d = 10: Bayer conditions hold");
        return finish(std::move(out), RunStatus::Unknown, "d = 10: Bayer conditions not certified");
    }
    const K3Complement& kc = *k3.complement;
    cert["lambda"] = poly_to_json(kc.q.lambda);
    cert["lambda_signature"] = {kc.lambda_signature.first, kc.lambda_signature.second};
    cert["disc_lemma"] = to_json(disc_lemma_check(E, kc.q));
    cert["sign_lemma"] = to_json(sign_lemma_check(E, kc.q));
    Json kj = to_json(kc);
    cert["q_lambda"] = kj["q_lambda"];
    cert["V"] = kj["V"];
    cert["sum_check"] = kj["sum_check"];
    cert["k3_invariants"] = to_json(k3_invariants());
    watch.lap("certificate");
    if (!kc.V || kc.sum_check.verdict != Verdict::Pass)
        return finish(std::move(out), RunStatus::Unknown, "complement V not certified");
    return finish(std::move(out), RunStatus::Constructed, "all stages certified");
}

}  // namespace k3
