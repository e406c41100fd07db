#include "k3/cmfield/trace_form.hpp"

#include "k3/exactpoly/resultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3 {

GramMatrix trace_form_of_element(const CMField& k, const Poly& lambda_in_E)
{
    const Poly l = reduce(k.E, lambda_in_E);
    if (l.is_zero())
        throw std::domain_error("trace_form: lambda is zero");
    if (conjugate(k, l) != l)
        throw std::domain_error("trace_form: lambda is not in the totally real subfield");
    const Poly& f = k.E.defining;
    const int n = k.E.degree();
    // Power sums s_m = Tr(theta^m), m < 2n - 1, by Newton's identities.
    std::vector<Rat> ps(2 * n - 1);
    ps[0] = n;
    for (int m = 1; m < 2 * n - 1; ++m) {
        Rat acc = m <= n ? -Rat(m) * f.coeff(n - m) : Rat(0);
        for (int j = 1; j <= std::min(m - 1, n); ++j)
            acc -= f.coeff(n - j) * ps[m - j];
        ps[m] = acc;
    }
    // Tr(u c) = sum_{s,t} u_s c_t ps[s + t].
    std::vector<std::vector<Rat>> u(n), w(n, std::vector<Rat>(n));
    Poly ui = l, cj = Poly::constant(1);
    for (int i = 0; i < n; ++i) {
        u[i].resize(n);
        for (int s2 = 0; s2 < n; ++s2)
            u[i][s2] = ui.coeff(s2);
        for (int s2 = 0; s2 < n; ++s2) {
            Rat acc = 0;
            for (int t = 0; t <= cj.degree(); ++t)
                acc += cj.coeff(t) * ps[s2 + t];
            w[i][s2] = acc;
        }
        ui = multiply(k.E, ui, Poly::variable());
        cj = multiply(k.E, cj, k.conj);
    }
    GramMatrix g(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat acc = 0;
            for (int s2 = 0; s2 < n; ++s2)
                if (u[i][s2] != 0)
                    acc += u[i][s2] * w[j][s2];
            g[i][j] = acc;
        }
    return g;
}

TraceForm trace_form(const CMField& k, const Poly& lambda)
{
    const Poly l = reduce(k.E0, lambda);
    if (l.is_zero())
        throw std::domain_error("trace_form: lambda is zero");
    return {trace_form_of_element(k, embed_real(k, l)), l};
}

namespace {

GramMatrix scaled_trace_gram(const NumberField& f, const Poly& mu)
{
    const int n = f.degree();
    std::vector<Rat> t(2 * n - 1);
    Poly pw = reduce(f, mu);
    for (int i = 0; i < 2 * n - 1; ++i) {
        t[i] = trace(f, pw);
        pw = multiply(f, pw, Poly::variable());
    }
    GramMatrix g(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[i][j] = t[i + j];
    return g;
}

}  // namespace

QFormInvariants trace_form_invariants(const CMField& k, const Poly& lambda)
{
    const Poly l = reduce(k.E0, lambda);
    if (l.is_zero())
        throw std::domain_error("trace_form: lambda is zero");
    const Poly two_l = l * Poly::constant(2);
    auto a = invariants(diagonalize(scaled_trace_gram(k.E0, two_l)));
    auto b = invariants(diagonalize(scaled_trace_gram(k.E0, -multiply(k.E0, two_l, k.D))));
    return sum_invariants(a, b);
}

PropertyResult disc_lemma_check(const CMField& k, const Poly& lambda)
{
    const Poly& g = k.E.defining;
    if (!is_squarefree(g))
        return disc_lemma_check(k, TraceForm{});
    return disc_lemma_check(k, trace_form(k, lambda));
}

PropertyResult disc_lemma_check(const CMField& k, const TraceForm& t)
{
    PropertyResult r;
    const Poly& g = k.E.defining;
    if (!is_squarefree(g)) {
        r.verdict = Verdict::NotApplicable;
        r.detail = "defining polynomial is not squarefree";
        return r;
    }
    Rat det = 1;
    for (const auto& x : diagonalize(t.gram).diagonal)
        det *= x;
    Rat disc = discriminant(g);
    Rat expected = (k.d() % 2 ? -disc : disc);
    // Same square class iff the product is a rational square.
    Rat prod = det * expected;
    bool same = prod > 0 && mpz_perfect_square_p(prod.get_num_mpz_t()) &&
                mpz_perfect_square_p(prod.get_den_mpz_t());
    r.witness = {{"det_q", to_string(det)},
                 {"disc_defining", to_string(disc)},
                 {"d", k.d()},
                 {"product_is_square", same}};
    r.verdict = same ? Verdict::Pass : Verdict::Fail;
    r.detail = "det(q_lambda) = (-1)^d disc(E) in Q^x/Q^x2";
    return r;
}

PropertyResult sign_lemma_check(const CMField& k, const Poly& lambda)
{
    return sign_lemma_check(k, trace_form(k, lambda));
}

PropertyResult sign_lemma_check(const CMField& k, const TraceForm& t)
{
    PropertyResult r;
    auto [pr, ps] = signature_of(t.lambda, k.E0);
    int qr = 0, qs = 0;
    for (const auto& x : diagonalize(t.gram).diagonal)
        (x > 0 ? qr : qs)++;
    r.witness = {{"lambda_signature", {pr, ps}}, {"q_signature", {qr, qs}}};
    r.verdict = (qr == 2 * pr && qs == 2 * ps) ? Verdict::Pass : Verdict::Fail;
    r.detail = "signature of q_lambda is twice that of lambda";
    return r;
}

Json to_json(const TraceForm& t)
{
    Json j;
    j["lambda"] = poly_to_json(t.lambda);
    j["gram"] = gram_to_json(t.gram);
    return j;
}

}  // namespace k3
