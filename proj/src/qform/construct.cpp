#include "k3/qform/construct.hpp"

#include "k3/qform/hilbert.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace k3 {

namespace {

// A binary form <a, a*delta> realizing Hasse set `hasse` needs
// (a, -delta)_v = -1 exactly at v in hasse. Candidates for a are signed
// products of the support primes times at most one auxiliary prime; such an a
// exists whenever the local conditions hold, by Dirichlet's theorem.
std::optional<Rat> binary_scalar(const Rat& delta, const std::set<Place>& hasse, int sign_a)
{
    const Rat minus_delta = -delta;
    for (const auto& v : hasse)
        if (!v.is_infinite() && is_local_square(minus_delta, v))
            return std::nullopt;

    std::set<Int> support_set{Int(2)};
    for (auto& p : prime_support(delta))
        support_set.insert(p);
    for (const auto& v : hasse)
        if (!v.is_infinite())
            support_set.insert(v.p());
    std::vector<Int> support(support_set.begin(), support_set.end());
    if (support.size() > 20)
        throw std::runtime_error("construct: too many primes in the support");

    auto matches = [&](const Rat& a, const std::vector<Int>& primes) {
        if (hilbert_symbol(a, minus_delta, Place::infinity()) != (hasse.count(Place::infinity()) ? -1 : 1))
            return false;
        for (const auto& p : primes) {
            Place v = Place::prime(p);
            if (hilbert_symbol(a, minus_delta, v) != (hasse.count(v) ? -1 : 1))
                return false;
        }
        return true;
    };

    // Subsets ordered by product.
    std::vector<Int> products;
    const std::size_t count = std::size_t{1} << support.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        Int prod = 1;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask >> i & 1)
                prod *= support[i];
        products.push_back(prod);
    }
    std::sort(products.begin(), products.end());

    const long kMaxAux = 200000;
    for (long aux = 1; aux <= kMaxAux; aux = (aux == 1 ? 3 : next_prime(aux))) {
        if (aux > 1 && support_set.count(Int(aux)))
            continue;
        std::vector<Int> primes = support;
        if (aux > 1)
            primes.push_back(Int(aux));
        for (const auto& prod : products) {
            Rat a(prod * aux * sign_a);
            if (matches(a, primes))
                return a;
        }
    }
    throw std::runtime_error("construct: no binary scalar found within the search bound");
}

std::set<Place> sym_diff(const std::set<Place>& a, const std::set<Place>& b)
{
    std::set<Place> out;
    for (const auto& x : a)
        if (!b.count(x))
            out.insert(x);
    for (const auto& x : b)
        if (!a.count(x))
            out.insert(x);
    return out;
}

std::optional<QSpace> binary(const QFormInvariants& inv)
{
    // <a, a*delta>: a > 0 unless the form is negative definite.
    const Rat delta = inv.det.value();
    int sign_a = inv.s == 2 ? -1 : 1;
    auto a = binary_scalar(delta, inv.hasse, sign_a);
    if (!a)
        return std::nullopt;
    return QSpace{{*a, *a * delta}};
}

}  // namespace

QSpace construct_with_invariants(const QFormInvariants& inv)
{
    std::string why;
    if (!admissible(inv, &why))
        throw std::domain_error("construct_with_invariants: inadmissible invariants (" + why + ")");
    if (inv.dim == 0)
        return {};
    if (inv.dim == 1)
        return QSpace{{inv.det.value()}};
    if (inv.dim == 2) {
        auto b = binary(inv);
        if (!b)
            throw std::logic_error("admissible binary tuple without a realization");
        return *b;
    }

    // T = <+-1, ..., +-1, c> (dimension n - 2) and a binary block B with
    // det(B) = det / det(T) and w(B) = w Δ w(T) Δ (det T, det B).
    const int n = inv.dim;
    for (long k = 1; k < 1000000; ++k) {
        // c runs through 1, -1, 2, -2, ... over squarefree integers.
        long mag = (k + 1) / 2;
        if (squarefree_part(Int(mag)) != mag)
            continue;
        const long c = (k % 2) ? mag : -mag;
        // Signature of B: (2,0), (1,1) or (0,2).
        for (int sb : {1, 0, 2}) {
            const int rb = 2 - sb;
            const int rt = inv.r - rb, st = inv.s - sb;
            if (rt < 0 || st < 0)
                continue;
            if (c > 0 ? rt < 1 : st < 1)
                continue;
            QSpace t;
            int plus = rt - (c > 0 ? 1 : 0), minus = st - (c < 0 ? 1 : 0);
            for (int i = 0; i < plus; ++i)
                t.diagonal.emplace_back(1);
            for (int i = 0; i < minus; ++i)
                t.diagonal.emplace_back(-1);
            t.diagonal.emplace_back(c);
            if (static_cast<int>(t.diagonal.size()) != n - 2)
                continue;
            QFormInvariants ti = invariants(t);
            QFormInvariants bi;
            bi.dim = 2;
            bi.r = rb;
            bi.s = sb;
            bi.det = inv.det * ti.det;
            bi.hasse = sym_diff(sym_diff(inv.hasse, ti.hasse),
                                symbol_support(ti.det.value(), bi.det.value()));
            if (!admissible(bi))
                continue;
            auto b = binary(bi);
            if (!b)
                continue;
            QSpace out = t;
            out.diagonal.insert(out.diagonal.end(), b->diagonal.begin(), b->diagonal.end());
            if (!(invariants(out) == inv))
                throw std::logic_error("construct_with_invariants: round trip failed");
            return out;
        }
    }
    throw std::runtime_error("construct_with_invariants: search bound exhausted");
}

}  // namespace k3
