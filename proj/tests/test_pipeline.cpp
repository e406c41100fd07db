#include "k3/exactpoly/cyclotomic.hpp"
#include "k3/exactpoly/json_io.hpp"
#include "k3/padic/newton_polygon.hpp"
#include "k3/pipeline/commands.hpp"
#include "k3/pipeline/run.hpp"
#include "k3/weil/checks.hpp"
#include "k3/weil/enumerate.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace k3;

namespace {

Rat R(const char* s) { return parse_rat(s); }

WeilCandidate cand(Poly L, long p = 2, long a = 1) { return {std::move(L), Int(p), a}; }

const Poly kQuartic{1, 0, R("1/2"), 0, 1};
const Poly kHalf{1, R("-1/2"), 1};

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("quartic fixture is constructed end to end")
{
    auto out = run(cand(kQuartic));
    REQUIRE(out.status == RunStatus::Constructed);
    const Json& c = out.certificate;
    CHECK(c["schema_version"] == 1);
    CHECK(c["kind"] == "certificate");
    CHECK(c["status"] == "Constructed");
    CHECK(c["weil_report"]["h"] == 2);
    CHECK(c["weil_report"]["d"] == 2);
    CHECK(c["weil_report"]["e"] == 1);
    CHECK(c["F"]["F0_discriminant_class"] == "6");
    CHECK(c["extension"]["regime"] == "trivial");
    CHECK(c["lambda_signature"] == Json{1, 1});
    CHECK(c["q_lambda"]["invariants"]["dim"] == 4);
    CHECK(c["V"]["invariants"]["dim"] == 18);
    CHECK(c["sum_check"]["verdict"] == "Pass");
    CHECK(c["sum_check"]["witness"]["sum"] == c["k3_invariants"]);
    CHECK(c["k3_invariants"]["det"] == "-1");
    CHECK(c["k3_invariants"]["hasse"] == Json{"2", "inf"});
    CHECK(c["base_change_exponent"] == "unresolved: geometric step out of scope");
    CHECK_FALSE(c.contains("telemetry"));
    CHECK(validate_certificate(c).empty());
    CHECK(exit_code(out.status) == 0);
}

TEST_CASE("cyclotomic candidate is rejected with witnesses")
{
    auto out = run(cand(Poly{1, 1, 1}));
    CHECK(out.status == RunStatus::Rejected);
    auto failures = out.certificate["weil_report"]["failures"].get<std::vector<int>>();
    CHECK(contains(failures, 2));
    CHECK(contains(failures, 4));
    CHECK(out.certificate["reason"].get<std::string>().rfind("failed properties: ", 0) == 0);
    CHECK_FALSE(out.certificate.contains("F"));
    CHECK(exit_code(out.status) == 1);
    CHECK(validate_certificate(out.certificate).empty());
}

TEST_CASE("rational F0 forces the imaginary quadratic regime")
{
    auto out = run(cand(kHalf.pow(2), 2, 2));
    REQUIRE(out.status == RunStatus::Constructed);
    const Json& c = out.certificate;
    CHECK(c["weil_report"]["e"] == 2);
    CHECK(c["extension"]["regime"] == "imaginary_quadratic");
    CHECK(c["extension"]["e"] == 2);
    CHECK(c["extension"]["trace"]["P"] == Json{"6", "-6", "1"});
    CHECK(c["extension"]["field"]["E"]["degree"] == 4);
    CHECK(c["completion_degree"]["verdict"] == "Pass");
    CHECK(validate_certificate(c).empty());

    PipelineConfig small;
    small.max_extension_degree = 3;
    auto guarded = run(cand(kHalf.pow(2), 2, 2), small);
    CHECK(guarded.status == RunStatus::Unknown);
    CHECK(guarded.certificate["reason"] == "[E:Q] exceeds max_extension_degree");
    CHECK_FALSE(guarded.certificate.contains("extension"));
    CHECK(exit_code(guarded.status) == 2);
}

TEST_CASE("higher powers in the imaginary quadratic regime")
{
    for (unsigned e = 3; e <= 5; ++e) {
        auto out = run(cand(kHalf.pow(e), 2, e));
        INFO("e=" << e);
        REQUIRE(out.status == RunStatus::Constructed);
        CHECK(out.certificate["extension"]["field"]["E"]["degree"] == static_cast<int>(2 * e));
        CHECK(out.certificate["disc_lemma"]["verdict"] == "Pass");
        CHECK(out.certificate["sign_lemma"]["verdict"] == "Pass");
        CHECK(validate_certificate(out.certificate).empty());
    }
}

TEST_CASE("unsupported extension is existence only")
{
    auto out = run(cand(kQuartic.pow(2), 2, 2));
    CHECK(out.status == RunStatus::ExistenceOnly);
    CHECK(out.certificate["extension"]["regime"] == "unsupported");
    CHECK_FALSE(out.certificate.contains("lambda"));
    CHECK(exit_code(out.status) == 0);
    CHECK(validate_certificate(out.certificate).empty());
}

TEST_CASE("d = 10 goes through the Bayer conditions")
{
    auto out = run(cand(kHalf.pow(10), 2, 10));
    CHECK(out.status == RunStatus::ExistenceOnly);
    const Json& b = out.certificate["bayer"];
    CHECK(b["condition_1_even_signature"]["verdict"] == "Pass");
    CHECK(b["condition_2_determinant"]["verdict"] == "Pass");
    CHECK(b["condition_3_local_hyperbolic"]["verdict"] == "Pass");
    CHECK(b["aux_identity"]["verdict"] == "Pass");
    CHECK(b["W"]["dim"] == 20);
    CHECK(b["lambda"] == "not constructed: existence only");
    CHECK(validate_certificate(out.certificate).empty());
}

TEST_CASE("runs are idempotent")
{
    for (const auto& c : {cand(kQuartic), cand(Poly{1, 1, 1}), cand(kHalf.pow(2), 2, 2), cand(kQuartic.pow(2), 2, 2)}) {
        auto a = run(c), b = run(c);
        CHECK(a.certificate.dump() == b.certificate.dump());
        CHECK(a.status == b.status);
    }
}

TEST_CASE("every census member yields a self-validating certificate")
{
    for (long q : {2, 3, 4, 5}) {
        Int Q(q);
        long p = q == 4 ? 2 : q, a = q == 4 ? 2 : 1;
        for (int two_d : {2, 4}) {
            for (const auto& w : enumerate(Q, two_d)) {
                CHECK(w.p == p);
                CHECK(w.a == a);
                auto out = run(w);
                INFO(to_json(w).dump());
                CHECK(out.status != RunStatus::Rejected);
                CHECK(validate_certificate(out.certificate).empty());
                if (out.status == RunStatus::Constructed) {
                    const Json& c = out.certificate;
                    CHECK(c["sum_check"]["verdict"] == "Pass");
                    CHECK(c["V"]["invariants"]["dim"] == 22 - 2 * c["weil_report"]["d"].get<int>());
                }
            }
        }
    }
}

TEST_CASE("tampered certificates are detected")
{
    const Json good = run(cand(kQuartic)).certificate;
    REQUIRE(validate_certificate(good).empty());

    auto tampered = [&](auto edit) {
        Json c = good;
        edit(c);
        return !validate_certificate(c).empty();
    };
    CHECK(tampered([](Json& c) { c["status"] = "Rejected"; }));
    CHECK(tampered([](Json& c) { c["lambda_signature"] = Json{2, 0}; }));
    CHECK(tampered([](Json& c) { c["q_lambda"]["gram"][0][0] = "7"; }));
    CHECK(tampered([](Json& c) { c["q_lambda"]["invariants"]["hasse"] = Json::array(); }));
    CHECK(tampered([](Json& c) { c["V"]["diagonal"][0] = "3"; }));
    CHECK(tampered([](Json& c) { c["V"]["invariants"]["det"] = "1"; }));
    CHECK(tampered([](Json& c) { c["disc_lemma"]["verdict"] = "Fail"; }));
    CHECK(tampered([](Json& c) { c["F"]["F"]["defining"] = Json{"1", "0", "1"}; }));
    CHECK(tampered([](Json& c) { c["input"]["L"] = Json{"1", "0", "1/4", "0", "1"}; }));
    CHECK(tampered([](Json& c) { c["weil_report"]["failures"] = Json{3}; }));
    CHECK(tampered([](Json& c) { c.erase("sum_check"); }));
    CHECK(tampered([](Json& c) { c["schema_version"] = 2; }));
}

TEST_CASE("rejected outcomes replay through the property checks")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-7, 7);
    int rejected = 0;
    for (int i = 0; i < 120; ++i) {
        const int d = 1 + static_cast<int>(rng() % 2);
        std::vector<Rat> c(2 * d + 1);
        c[0] = 1;
        for (int k = 1; k < 2 * d; ++k)
            c[k] = make_rat(num(rng), 1 << (rng() % 3));
        c[2 * d] = 1;
        for (int k = 0; k < d; ++k)
            c[2 * d - k] = c[k];
        WeilCandidate w = cand(Poly(c));
        auto out = run(w);
        if (out.status != RunStatus::Rejected)
            continue;
        ++rejected;
        const Json& props = out.certificate["weil_report"]["properties"];
        for (int idx : out.certificate["weil_report"]["failures"].get<std::vector<int>>()) {
            INFO(to_json(w).dump() << " property " << idx);
            switch (idx) {
            case 1:
                CHECK(check_unit_circle(w).verdict == Verdict::Fail);
                CHECK(props["p1_unit_circle"] == to_json(check_unit_circle(w)));
                break;
            case 2: {
                auto n = props["p2_no_root_of_unity"]["witness"]["cyclotomic_index"].get<unsigned long>();
                CHECK(divides(cyclotomic(n), w.L));
                break;
            }
            case 3: {
                Rat coef = w.L.coeff(props["p3_l_integrality"]["witness"]["index"].get<int>());
                Int den = coef.get_den();
                while (den % 2 == 0)
                    den /= 2;
                CHECK(den != 1);
                break;
            }
            case 4: {
                auto np = newton_polygon(w.L, w.p);
                CHECK(props["p4_newton_shape"]["witness"]["vertices"] == to_json(np)["vertices"]);
                CHECK(check_newton_shape(w).result.verdict == Verdict::Fail);
                break;
            }
            case 5:
                CHECK(check_power_structure(w).result.verdict == Verdict::Fail);
                break;
            }
        }
    }
    CHECK(rejected > 20);
}

TEST_CASE("status to exit code")
{
    CHECK(exit_code(RunStatus::Constructed) == 0);
    CHECK(exit_code(RunStatus::ExistenceOnly) == 0);
    CHECK(exit_code(RunStatus::Rejected) == 1);
    CHECK(exit_code(RunStatus::Unknown) == 2);
    CHECK(to_string(RunStatus::ExistenceOnly) == "ExistenceOnly");
}

TEST_CASE("malformed JSON reports its position")
{
    CHECK(parse_json_input("{\"a\": 1}", "x")["a"] == 1);
    try {
        parse_json_input("{\n  \"L\": [1, 2,\n  ]\n}", "in.json");
        FAIL("no exception");
    } catch (const UsageError& e) {
        std::string msg = e.what();
        CHECK(msg.rfind("in.json:3:", 0) == 0);
        CHECK(msg.find("malformed JSON") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_json_input("", "<stdin>"), UsageError);
}

TEST_CASE("command layer")
{
    Json quartic = {{"L", {"1", "0", "1/2", "0", "1"}}, {"p", 2}, {"a", 1}};
    auto chk = cmd_check(quartic);
    CHECK(chk.exit_code == 0);
    CHECK(chk.output["schema_version"] == 1);
    CHECK(cmd_check({{"L", {"1", "1", "1"}}, {"p", 2}, {"a", 1}}).exit_code == 1);
    CHECK_THROWS(cmd_check({{"L", {"2", "1", "1"}}, {"p", 2}, {"a", 1}}));

    auto cen = cmd_enumerate(Int(2), 2, {});
    CHECK(cen.exit_code == 0);
    CHECK(cen.output["kind"] == "census");
    CHECK(cen.output["count"] == 4);
    CHECK(cmd_enumerate(Int(3), 2, {}).output["count"] == 8);

    auto lat = cmd_lattice();
    CHECK(lat.output["rank"] == 22);
    CHECK(lat.output["determinant"] == "-1");
    CHECK(lat.output["invariants"]["signature"] == Json{3, 19});

    auto ext = cmd_extend({{"L", {"1", "-1/2", "1"}}, {"p", 2}, {"a", 1}}, 2);
    CHECK(ext.output["output"]["L"] == Json{"1", "7/4", "1"});
    CHECK(ext.output["output"]["a"] == 2);

    auto inv = cmd_qform("invariants", {{"diagonal", {"1", "1", "1"}}});
    CHECK(inv.exit_code == 0);
    CHECK(inv.output["invariants"]["hasse"] == Json::array());
    Json bad = {{"dim", 1}, {"signature", {1, 0}}, {"det", "1"}, {"hasse", {"2", "inf"}}};
    CHECK(cmd_qform("admissible", bad).exit_code == 1);
    CHECK(cmd_qform("construct", bad).exit_code == 1);
    CHECK_THROWS_AS(cmd_qform("frobnicate", bad), UsageError);

    auto con = cmd_construct(quartic, {}, false);
    CHECK(con.exit_code == 0);
    CHECK_FALSE(con.output.contains("telemetry"));
    CHECK(cmd_construct(quartic, {}, true).output.contains("telemetry"));
}

TEST_CASE("rendering is deterministic")
{
    Json j = {{"schema_version", 1}, {"b", {1, 2}}, {"a", {{"x", "1/2"}}}};
    CHECK(render(j, false) == render(j, false));
    CHECK(render(j, false).back() == '\n');
    auto pretty = render(j, true);
    CHECK(pretty.find("schema_version: 1") != std::string::npos);
    CHECK(pretty.find("x: 1/2") != std::string::npos);
}
