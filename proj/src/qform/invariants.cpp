#include "k3/qform/invariants.hpp"

#include "k3/qform/hilbert.hpp"

#include <stdexcept>

namespace k3 {

QFormInvariants neutral_invariants() { return {}; }

QSpace diagonalize(const GramMatrix& g)
{
    const std::size_t n = g.size();
    for (const auto& row : g)
        if (row.size() != n)
            throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g[i][j] != g[j][i])
                throw std::invalid_argument("Gram matrix is not symmetric");

    GramMatrix a = g;
    QSpace out;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && a[j][j] == 0)
                ++j;
            if (j < n) {
                std::swap(a[i], a[j]);
                for (auto& row : a)
                    std::swap(row[i], row[j]);
            } else {
                j = i + 1;
                while (j < n && a[i][j] == 0)
                    ++j;
                if (j == n)
                    throw std::domain_error("degenerate Gram matrix");
                // e_i <- e_i + e_j gives a nonzero pivot 2 a_ij.
                for (std::size_t k = 0; k < n; ++k)
                    a[i][k] += a[j][k];
                for (std::size_t k = 0; k < n; ++k)
                    a[k][i] += a[k][j];
            }
        }
        const Rat piv = a[i][i];
        for (std::size_t k = i + 1; k < n; ++k) {
            if (a[k][i] == 0)
                continue;
            Rat f = a[k][i] / piv;
            for (std::size_t c = i; c < n; ++c)
                a[k][c] -= f * a[i][c];
            for (std::size_t r = i; r < n; ++r)
                a[r][k] -= f * a[r][i];
        }
        out.diagonal.push_back(piv);
    }
    return out;
}

QFormInvariants invariants(const QSpace& v)
{
    QFormInvariants inv;
    inv.dim = static_cast<int>(v.diagonal.size());
    Rat det = 1;
    std::set<Int> primes{Int(2)};
    for (const auto& x : v.diagonal) {
        if (x == 0)
            throw std::domain_error("diagonal entry zero");
        (x > 0 ? inv.r : inv.s)++;
        det *= x;
        for (auto& p : prime_support(x))
            primes.insert(p);
    }
    inv.det = square_class(det);
    std::vector<Place> places{Place::infinity()};
    for (const auto& p : primes)
        places.push_back(Place::prime(p));
    for (const auto& place : places) {
        int prod = 1;
        for (std::size_t i = 0; i < v.diagonal.size(); ++i)
            for (std::size_t j = i + 1; j < v.diagonal.size(); ++j)
                prod *= hilbert_symbol(v.diagonal[i], v.diagonal[j], place);
        if (prod == -1)
            inv.hasse.insert(place);
    }
    return inv;
}

bool equivalent(const QSpace& v, const QSpace& w) { return invariants(v) == invariants(w); }

std::set<Place> symbol_support(const Rat& a, const Rat& b)
{
    std::set<Int> primes{Int(2)};
    for (auto& p : prime_support(a))
        primes.insert(p);
    for (auto& p : prime_support(b))
        primes.insert(p);
    std::set<Place> out;
    if (hilbert_symbol(a, b, Place::infinity()) == -1)
        out.insert(Place::infinity());
    for (const auto& p : primes) {
        Place v = Place::prime(p);
        if (hilbert_symbol(a, b, v) == -1)
            out.insert(v);
    }
    return out;
}

namespace {

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

bool fail(std::string* reason, const char* why)
{
    if (reason)
        *reason = why;
    return false;
}

}  // namespace

bool admissible(const QFormInvariants& inv, std::string* reason)
{
    if (inv.r < 0 || inv.s < 0 || inv.r + inv.s != inv.dim)
        return fail(reason, "signature does not add up to the dimension");
    if (inv.det.sign != ((inv.s % 2) ? -1 : 1))
        return fail(reason, "sign of the determinant differs from (-1)^s");
    if (inv.hasse.size() % 2)
        return fail(reason, "odd number of ramified places");
    const bool inf_expected = ((static_cast<long>(inv.s) * (inv.s - 1) / 2) % 2) == 1;
    if (inv.hasse.count(Place::infinity()) != (inf_expected ? 1u : 0u))
        return fail(reason, "Hasse invariant at infinity disagrees with the signature");
    // Binary and smaller forms have extra local obstructions:
    //   dim 0: only the neutral tuple;
    //   dim 1: <d> has no pairs, so hasse must be empty;
    //   dim 2: <a, a d> has Hasse (a, -d)_v, so -d must be a nonsquare in
    //          Q_v at every ramified place v.
    if (inv.dim == 0 && !(inv.det == SquareClass{} && inv.hasse.empty()))
        return fail(reason, "dimension 0 admits only the neutral tuple");
    if (inv.dim == 1 && !inv.hasse.empty())
        return fail(reason, "a one-dimensional form has trivial Hasse invariant");
    if (inv.dim == 2) {
        Rat minus_d = -inv.det.value();
        for (const auto& v : inv.hasse)
            if (is_local_square(minus_d, v))
                return fail(reason, "binary form: -det is a local square at a ramified place");
    }
    return true;
}

QFormInvariants sum_invariants(const QFormInvariants& a, const QFormInvariants& b)
{
    QFormInvariants out;
    out.dim = a.dim + b.dim;
    out.r = a.r + b.r;
    out.s = a.s + b.s;
    out.det = a.det * b.det;
    out.hasse = sym_diff(sym_diff(a.hasse, b.hasse), symbol_support(a.det.value(), b.det.value()));
    return out;
}

QFormInvariants complement_invariants(const QFormInvariants& sub, const QFormInvariants& whole)
{
    if (sub.dim > whole.dim || sub.r > whole.r || sub.s > whole.s)
        throw std::domain_error("complement_invariants: subspace does not fit");
    QFormInvariants x;
    x.dim = whole.dim - sub.dim;
    x.r = whole.r - sub.r;
    x.s = whole.s - sub.s;
    x.det = whole.det * sub.det;
    x.hasse = sym_diff(sym_diff(whole.hasse, sub.hasse), symbol_support(sub.det.value(), x.det.value()));
    return x;
}

bool is_hyperbolic_at_p(const QFormInvariants& inv, const Place& p)
{
    if (inv.dim % 2)
        throw std::domain_error("is_hyperbolic_at_p: odd dimension");
    const int m = inv.dim / 2;
    QFormInvariants plane{2, 1, 1, SquareClass{-1, 1}, {}};
    QFormInvariants h = neutral_invariants();
    for (int i = 0; i < m; ++i)
        h = sum_invariants(h, plane);
    if (p.is_infinite())
        return inv.r == m && inv.s == m;
    if (!is_local_square(inv.det.value() * h.det.value(), p))
        return false;
    return inv.hasse.count(p) == h.hasse.count(p);
}

Json to_json(const QSpace& v)
{
    Json d = Json::array();
    for (const auto& x : v.diagonal)
        d.push_back(rat_to_json(x));
    return {{"diagonal", d}};
}

Json to_json(const QFormInvariants& inv)
{
    Json h = Json::array();
    for (const auto& p : inv.hasse)
        h.push_back(p.to_string());
    return {{"dim", inv.dim},
            {"signature", {inv.r, inv.s}},
            {"det", square_class_to_json(inv.det)},
            {"hasse", h}};
}

QFormInvariants invariants_from_json(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("invariants must be a JSON object");
    for (const char* key : {"dim", "signature", "det", "hasse"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("invariants need the field \"") + key + "\"");
    QFormInvariants inv;
    inv.dim = j.at("dim").get<int>();
    const auto& sig = j.at("signature");
    if (!sig.is_array() || sig.size() != 2)
        throw std::invalid_argument("signature must be [r, s]");
    inv.r = sig[0].get<int>();
    inv.s = sig[1].get<int>();
    if (inv.r + inv.s != inv.dim || inv.r < 0 || inv.s < 0)
        throw std::invalid_argument("signature does not match the dimension");
    Rat det = rat_from_json(j.at("det"));
    if (det == 0)
        throw std::invalid_argument("determinant must be nonzero");
    inv.det = square_class(det);
    if (!j.at("hasse").is_array())
        throw std::invalid_argument("hasse must be an array of places");
    for (const auto& p : j.at("hasse")) {
        if (p.is_string())
            inv.hasse.insert(Place::parse(p.get<std::string>()));
        else if (p.is_number_integer())
            inv.hasse.insert(Place::parse(p.dump()));
        else
            throw std::invalid_argument("places are \"inf\" or primes");
    }
    return inv;
}

QSpace qspace_from_json(const Json& j)
{
    const Json& d = j.is_object() && j.contains("diagonal") ? j.at("diagonal") : j;
    if (!d.is_array())
        throw std::invalid_argument("a diagonal form is an array of rationals");
    QSpace v;
    for (const auto& x : d) {
        Rat r = rat_from_json(x);
        if (r == 0)
            throw std::invalid_argument("diagonal entries must be nonzero");
        v.diagonal.push_back(r);
    }
    return v;
}

Json gram_to_json(const GramMatrix& g)
{
    Json rows = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(rat_to_json(x));
        rows.push_back(r);
    }
    return rows;
}

GramMatrix gram_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("a Gram matrix is an array of rows");
    GramMatrix g;
    for (const auto& row : j) {
        if (!row.is_array())
            throw std::invalid_argument("a Gram matrix is an array of rows");
        std::vector<Rat> r;
        for (const auto& x : row)
            r.push_back(rat_from_json(x));
        g.push_back(std::move(r));
    }
    return g;
}

}  // namespace k3
