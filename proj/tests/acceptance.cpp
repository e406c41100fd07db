// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "k3/cmfield/cm_field.hpp"
#include "k3/cmfield/extension.hpp"
#include "k3/cmfield/trace_form.hpp"
#include "k3/exactpoly/cyclotomic.hpp"
#include "k3/padic/slope_verdict.hpp"
#include "k3/pipeline/commands.hpp"
#include "k3/pipeline/run.hpp"
#include "k3/qform/construct.hpp"
#include "k3/qform/hilbert.hpp"
#include "k3/qform/invariants.hpp"
#include "k3/qform/lattice.hpp"
#include "k3/weil/base_extend.hpp"
#include "k3/weil/checks.hpp"
#include "k3/weil/enumerate.hpp"

#include "oracles/weil_scan.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace k3;

namespace {

Rat R(const char* s) { return parse_rat(s); }

struct Outcome
{
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= budget_s) {
        o.ok = false;
        o.note = "time budget exceeded";
    }
    if (!o.ok)
        ++failures;
    std::printf("%s %s: %s (%.2f s / %.0f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title, secs, budget_s,
                o.note.empty() ? "" : " - ", o.note.c_str());
    std::fflush(stdout);
}

Outcome ac1()
{
    Outcome o;
    auto out = cmd_lattice().output;
    o.require(out["rank"] == 22, "rank");
    o.require(out["determinant"] == "-1", "determinant");
    o.require(out["invariants"]["det"] == "-1", "det class");
    o.require(out["invariants"]["hasse"] == Json{"2", "inf"}, "hasse set");
    o.require(out["invariants"]["signature"] == Json{3, 19}, "signature");
    o.note = o.ok ? "det -1, hasse {2, inf}, signature (3,19)" : o.note;
    return o;
}

Outcome ac2()
{
    Outcome o;
    std::mt19937_64 rng(2002);
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 60);
    for (int i = 0; i < 500; ++i) {
        auto draw = [&] {
            long n = 0;
            while (n == 0)
                n = num(rng);
            return make_rat(n, den(rng));
        };
        Rat a = draw(), b = draw();
        std::set<Int> primes{Int(2)};
        for (const Rat* x : {&a, &b})
            for (const auto& p : prime_support(*x))
                primes.insert(p);
        int prod = hilbert_symbol(a, b, Place::infinity());
        for (const auto& p : primes)
            prod *= hilbert_symbol(a, b, Place::prime(p));
        o.require(prod == 1, "product formula fails for " + to_string(a) + ", " + to_string(b));
    }
    return o;
}

Outcome ac3()
{
    Outcome o;
    std::mt19937_64 rng(3003);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 12);
    std::uniform_int_distribution<int> len(0, 5);
    for (int i = 0; i < 200; ++i) {
        QSpace v, w;
        for (QSpace* s : {&v, &w})
            for (int k = 0, n = len(rng); k < n; ++k) {
                long x = 0;
                while (x == 0)
                    x = num(rng);
                s->diagonal.push_back(make_rat(x, den(rng)));
            }
        QSpace vw = v;
        vw.diagonal.insert(vw.diagonal.end(), w.diagonal.begin(), w.diagonal.end());
        o.require(sum_invariants(invariants(v), invariants(w)) == invariants(vw), "additivity fails");
    }
    return o;
}

Outcome ac4()
{
    Outcome o;
    const std::vector<Place> places = {Place::prime(Int(2)), Place::prime(Int(3)), Place::prime(Int(5)),
                                       Place::infinity()};
    int tuples = 0;
    for (int dim = 0; dim <= 6; ++dim)
        for (int s = 0; s <= dim; ++s)
            for (long d : {1L, 2L, 3L, 5L, 6L, 30L})
                for (long sign : {1L, -1L})
                    for (unsigned mask = 0; mask < 16; ++mask) {
                        if (__builtin_popcount(mask) % 2)
                            continue;
                        QFormInvariants t;
                        t.dim = dim;
                        t.r = dim - s;
                        t.s = s;
                        t.det = square_class(Rat(sign * d));
                        for (unsigned i = 0; i < 4; ++i)
                            if (mask >> i & 1)
                                t.hasse.insert(places[i]);
                        if (!admissible(t))
                            continue;
                        ++tuples;
                        o.require(invariants(construct_with_invariants(t)) == t,
                                  "round trip fails for " + to_json(t).dump());
                    }
    o.require(tuples > 200, "grid too small");
    if (o.ok)
        o.note = std::to_string(tuples) + " admissible tuples";
    return o;
}

Outcome ac5()
{
    Outcome o;
    for (auto [q, expected] : {std::pair{2L, 4}, std::pair{3L, 8}}) {
        auto out = cmd_enumerate(Int(q), 2, {}).output;
        o.require(out["count"] == expected, "census count for q=" + std::to_string(q));
        std::vector<Rat> got;
        for (const auto& c : out["candidates"])
            got.push_back(parse_rat(c["L"][1].get<std::string>()));
        std::vector<Rat> scan = oracle::degree_two_census(q, 1);
        o.require(got == scan, "census differs from the numeric scan for q=" + std::to_string(q));
    }
    std::vector<Rat> q2;
    for (const auto& w : enumerate(Int(2), 2))
        q2.push_back(w.L.coeff(1));
    o.require(q2 == std::vector<Rat>{R("-3/2"), R("-1/2"), R("1/2"), R("3/2")}, "q=2 members");
    return o;
}

Outcome ac6()
{
    Outcome o;
    auto out = run({Poly{1, 0, R("1/2"), 0, 1}, Int(2), 1});
    const Json& c = out.certificate;
    o.require(out.status == RunStatus::Constructed, "status " + to_string(out.status));
    o.require(c["weil_report"]["h"] == 2 && c["weil_report"]["d"] == 2 && c["weil_report"]["e"] == 1, "h, d, e");
    o.require(c["F"]["F0_discriminant_class"] == "6", "F0 is not Q(sqrt 6)");
    o.require(c["lambda_signature"] == Json{1, 1}, "lambda signature");
    o.require(c["sum_check"]["witness"]["sum"] == c["k3_invariants"], "q_lambda + V");
    o.require(c["k3_invariants"] == to_json(invariants(diagonalize(k3_lattice()))), "K3 invariants");
    o.require(validate_certificate(c).empty(), "certificate does not self-validate");
    return o;
}

Outcome ac7()
{
    Outcome o;
    int checked = 0;
    for (int two_d : {2, 4})
        for (const auto& w : enumerate(Int(2), two_d))
            for (unsigned n : {2u, 3u}) {
                auto ext = base_extend(w, n);
                o.require(ext.a == w.a * static_cast<long>(n), "a does not scale");
                o.require(check_all(ext).admissible(),
                          "base change by " + std::to_string(n) + " of " + to_json(w).dump());
                ++checked;
            }
    if (o.ok)
        o.note = std::to_string(checked) + " extensions";
    return o;
}

Outcome ac8()
{
    Outcome o;
    const Poly quartic{1, 0, R("1/2"), 0, 1};
    for (const Poly& Q : {Poly{1, 0, 1}, Poly{1, 1, 1}, cyclotomic(5), quartic}) {
        CMField k = trivial_extension(weil_field(Q));
        for (int s = 0; s <= k.d(); ++s) {
            Poly lam = find_lambda(k.E0, {k.d() - s, s});
            o.require(disc_lemma_check(k, lam).verdict == Verdict::Pass, "disc lemma");
            o.require(sign_lemma_check(k, lam).verdict == Verdict::Pass, "sign lemma");
        }
    }
    return o;
}

// Q_2-irreducible factors with all reciprocal roots of negative valuation.
struct NegFactor
{
    Poly f;
    std::optional<long> u;  // f = 1 - (u/2) T
};

Outcome ac9()
{
    Outcome o;
    auto lin = [](long u) { return NegFactor{Poly{1, Rat(-u, 2)}, u}; };
    const std::vector<NegFactor> neg = {
        lin(1), lin(3),
        {Poly{1, R("-5/4")}, {}},              // valuation -2
        {Poly{1, 0, R("-1/2")}, {}},           // tau^2 = 1/2
        {Poly{1, 0, R("1/2")}, {}},            // tau^2 = -1/2
        {Poly{1, 0, 0, R("-1/2")}, {}},        // tau^3 = 1/2
        {Poly{1, R("1/2"), R("1/4")}, {}},     // unramified quadratic
        {Poly{1, 0, R("-3/2")}, {}},           // tau^2 = 3/2
        {Poly{1, 0, R("-1/8")}, {}},           // tau^2 = 1/8
    };
    const std::vector<Poly> units = {Poly::constant(1), Poly{1, 1, 1}, Poly{1, 2}};

    enum class Known { Irreducible, Reducible, NoNegative };
    struct Case
    {
        Poly f;
        Known known;
        bool designated_unknown;
    };
    std::vector<Case> corpus;
    for (const auto& n : neg)
        for (const auto& u : units)
            corpus.push_back({n.f * u, Known::Irreducible, false});
    corpus.push_back({Poly{1, 1, 1}, Known::NoNegative, false});
    corpus.push_back({Poly{1, -3} * Poly{1, 2}, Known::NoNegative, false});
    corpus.push_back({Poly{1, 0, 1}, Known::NoNegative, false});
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {0, 2}, {1, 3}, {3, 5}, {4, 6}, {5, 8}, {0, 6}, {2, 7}, {6, 7}, {1, 8}, {3, 4}})
        corpus.push_back({neg[i].f * neg[j].f, Known::Reducible, false});
    // Two rational roots u/2: the residual is (y + 1)^2, and the lifted
    // values u + 1 separate the roots unless they share their 2-adic valuation.
    auto v2 = [](long x) { return x == 0 ? 1000 : __builtin_ctzl(static_cast<unsigned long>(x < 0 ? -x : x)); };
    for (auto [a, b] : std::vector<std::pair<long, long>>{
             {1, 7}, {3, 5}, {1, 5}, {1, 9}, {3, 11}, {5, 13}, {-1, 3}, {1, 1}}) {
        bool designated = v2(a + 1) == v2(b + 1) || a == -1 || b == -1;
        corpus.push_back({lin(a).f * lin(b).f, Known::Reducible, designated});
    }
    corpus.push_back({neg[6].f * neg[6].f, Known::Reducible, false});
    corpus.push_back({neg[3].f * neg[3].f, Known::Reducible, false});
    o.require(corpus.size() == 50, "corpus size " + std::to_string(corpus.size()));

    int decided = 0, designated = 0;
    for (const auto& c : corpus) {
        auto v = negative_part_verdict(c.f, Int(2));
        const std::string tag = poly_to_json(c.f).dump() + " -> " + to_string(v.value);
        switch (c.known) {
        case Known::NoNegative:
            o.require(v.value == SlopeOutcome::NoNegativeSlope, "contradiction: " + tag);
            break;
        case Known::Irreducible:
            o.require(v.value == SlopeOutcome::Irreducible || v.value == SlopeOutcome::Unknown,
                      "contradiction: " + tag);
            break;
        case Known::Reducible:
            o.require(v.value == SlopeOutcome::Reducible || v.value == SlopeOutcome::Unknown,
                      "contradiction: " + tag);
            break;
        }
        if (c.designated_unknown) {
            ++designated;
            o.require(v.value == SlopeOutcome::Unknown, "designated case decided: " + tag);
        }
        if (v.value == SlopeOutcome::Unknown)
            o.require(!v.reason.empty(), "Unknown without reason: " + tag);
        else
            ++decided;
    }
    if (o.ok)
        o.note = std::to_string(decided) + "/50 decided, " + std::to_string(designated) +
                 " designated Unknown confirmed";
    return o;
}

}  // namespace

int main()
{
    criterion("AC1", "K3 lattice invariants", 1, ac1);
    criterion("AC2", "Hilbert product formula on 500 pairs", 5, ac2);
    criterion("AC3", "additivity on 200 diagonal pairs", 5, ac3);
    criterion("AC4", "constructor round trip on the grid", 30, ac4);
    criterion("AC5", "degree-2 census for q = 2 and q = 3", 10, ac5);
    criterion("AC6", "end-to-end construction of the quartic", 10, ac6);
    criterion("AC7", "base-extension coherence on the q = 2 census", 60, ac7);
    criterion("AC8", "trace-form lemmas on fixtures", 5, ac8);
    criterion("AC9", "slope-verdict soundness on 50 products", 10, ac9);
    std::printf("AC10 NOT REPRODUCIBLE (declared): count of 1995 degree-20 candidates over q = 2 is out of "
                "desk scale; covered by AC5 and AC7\n");
    return failures == 0 ? 0 : 1;
}
