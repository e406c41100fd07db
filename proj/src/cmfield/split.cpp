#include "k3/cmfield/split.hpp"

#include "k3/exactpoly/modpoly.hpp"
#include "k3/exactpoly/resultant.hpp"

namespace k3 {

namespace {

bool divides_rat(const Int& p, const Rat& x)
{
    return mpz_divisible_p(Int(x.get_num()).get_mpz_t(), p.get_mpz_t()) ||
           mpz_divisible_p(Int(x.get_den()).get_mpz_t(), p.get_mpz_t());
}

}  // namespace

std::string to_string(SplitStatus s)
{
    switch (s) {
    case SplitStatus::AllSplit:
        return "AllSplit";
    case SplitStatus::NotAllSplit:
        return "NotAllSplit";
    case SplitStatus::Unknown:
        return "Unknown";
    }
    return "?";
}

SplitResult split_test(const NumberField& E0, const Poly& D, const Int& p)
{
    SplitResult r;
    r.witness["p"] = p.get_str();
    if (p == 2) {
        r.reason = "p = 2 excluded";
        return r;
    }
    if (!p.fits_ulong_p() || p >= (Int(1) << 32)) {
        r.reason = "p too large";
        return r;
    }
    const Poly& g = E0.defining;
    for (const auto& c : g.coefficients())
        if (mpz_divisible_p(Int(c.get_den()).get_mpz_t(), p.get_mpz_t())) {
            r.reason = "p divides a denominator of the defining polynomial";
            return r;
        }
    if (g.degree() >= 2 && divides_rat(p, discriminant(g))) {
        r.reason = "p divides the discriminant of E0";
        return r;
    }
    const Poly d = reduce(E0, D);
    if (d.is_zero()) {
        r.reason = "D is zero";
        return r;
    }
    const Rat nd = norm(E0, d);
    if (divides_rat(p, nd)) {
        r.reason = "p divides the norm of D";
        return r;
    }
    for (const auto& c : d.coefficients())
        if (mpz_divisible_p(Int(c.get_den()).get_mpz_t(), p.get_mpz_t())) {
            r.reason = "p divides a denominator of D";
            return r;
        }

    const std::uint64_t pp = p.get_ui();
    modp::MPoly gm = modp::reduce(g, pp), dm = modp::reduce(d, pp);
    Json places = Json::array();
    bool all = true;
    for (const auto& fac : modp::factor(gm, pp)) {
        // D is a square in F_{p^f} = F_p[x]/(h) iff D^((p^f - 1)/2) = 1.
        const int f = modp::degree(fac.poly);
        Int exp = (ipow(p, f) - 1) / 2;
        modp::MPoly w = modp::powmod(modp::rem(dm, fac.poly, pp), exp, fac.poly, pp);
        bool square = w == modp::MPoly{1};
        all = all && square;
        places.push_back({{"residue_degree", f}, {"D_square", square}});
    }
    r.witness["places"] = places;
    r.status = all ? SplitStatus::AllSplit : SplitStatus::NotAllSplit;
    r.reason = all ? "D is a square at every place above p" : "D is a nonsquare at some place above p";
    return r;
}

}  // namespace k3
