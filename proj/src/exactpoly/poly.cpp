#include "k3/exactpoly/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3 {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree)
{
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::variable() { return monomial(1, 1); }

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rat Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

const Rat& Poly::leading() const
{
    if (c_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rat Poly::operator()(const Rat& x) const
{
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero())
        return {};
    Rat inv = 1 / leading();
    return *this * inv;
}

Poly Poly::reversed() const
{
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

Poly Poly::compose(const Poly& g) const
{
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * g + constant(*it);
    return acc;
}

Poly Poly::scale_variable(const Rat& c) const
{
    Poly r = *this;
    Rat f = 1;
    for (auto& x : r.c_) {
        x *= f;
        f *= c;
    }
    r.trim();
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly result = constant(1), base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Rat Poly::content() const
{
    if (is_zero())
        return 0;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : c_) {
        if (x == 0)
            continue;
        num_gcd = gcd(num_gcd, Int(x.get_num()));
        den_lcm = lcm(den_lcm, Int(x.get_den()));
    }
    return make_rat(abs(num_gcd), den_lcm);
}

Poly Poly::primitive_part() const
{
    if (is_zero())
        return {};
    return *this * (1 / content());
}

std::vector<Int> Poly::integer_coefficients() const
{
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const auto& x : c_) {
        if (x.get_den() != 1)
            throw std::domain_error("polynomial has non-integral coefficients");
        out.emplace_back(x.get_num());
    }
    return out;
}

bool operator<(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Rat> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    const Rat inv_lead = 1 / b.leading();
    std::vector<Rat> quot(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0)
            continue;
        Rat q = rem[i] * inv_lead;
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a.primitive_part(), y = b.primitive_part();
    while (!y.is_zero()) {
        Poly r = (x % y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b)
{
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    Rat inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly squarefree_part(const Poly& f)
{
    if (f.degree() <= 0)
        return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

bool is_squarefree(const Poly& f)
{
    return f.degree() <= 0 || gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f)
{
    if (f.is_zero())
        throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() == 0)
        return out;
    Poly fm = f.monic();
    Poly a0 = gcd(fm, fm.derivative());
    Poly b = fm / a0;
    Poly c = fm.derivative() / a0;
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly a = gcd(b, d);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0)
            out.emplace_back(a.monic(), i);
    }
    return out;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys)
{
    if (xs.size() != ys.size())
        throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level)
                break;
        }
    Poly result;
    for (std::size_t i = n; i-- > 0;)
        result = result * Poly{-xs[i], 1} + Poly::constant(dd[i]);
    return result;
}

std::vector<Rat> reciprocal_power_sums(const Poly& f, std::size_t count)
{
    if (f.is_zero() || f.coeff(0) == 0)
        throw std::domain_error("power sums need a nonzero constant term");
    Poly g = f * (1 / f.coeff(0));
    // Newton: k c_k + sum_{j=1}^{k} s_j c_{k-j} = 0.
    std::vector<Rat> s(count + 1);
    for (std::size_t k = 1; k <= count; ++k) {
        Rat acc = g.coeff(k) * static_cast<long>(k);
        for (std::size_t j = 1; j < k; ++j)
            acc += s[j] * g.coeff(k - j);
        s[k] = -acc;
    }
    s.erase(s.begin());
    return s;
}

}  // namespace k3
