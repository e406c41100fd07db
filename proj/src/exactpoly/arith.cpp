#include "k3/exactpoly/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace k3 {

Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s[0] == '+')
            s.remove_prefix(1);
        return Int(std::string(s), 10);
    };

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Int d = to_int(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rat(to_int(num), d);
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& n) { return n.get_str(10); }

int sign(const Rat& r) { return sgn(r); }
int sign(const Int& n) { return sgn(n); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(long n) { return is_prime(Int(n)); }

long next_prime(long n)
{
    Int r;
    mpz_nextprime(r.get_mpz_t(), Int(n).get_mpz_t());
    return r.get_si();
}

namespace {

Int pollard_brent(const Int& n)
{
    constexpr std::size_t kBlock = 128;
    constexpr std::size_t kMaxRound = std::size_t{1} << 23;
    for (unsigned long c = 1; c < 64; ++c) {
        auto step = [&](const Int& v) {
            Int t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        Int y = 2, x, ys, q = 1, g = 1;
        std::size_t r = 1;
        while (g == 1) {
            x = y;
            for (std::size_t i = 0; i < r; ++i)
                y = step(y);
            for (std::size_t k = 0; k < r && g == 1; k += kBlock) {
                ys = y;
                for (std::size_t i = 0; i < std::min(kBlock, r - k); ++i) {
                    y = step(y);
                    Int diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
            if (r > kMaxRound)
                throw FactorizationLimit("integer factorization exceeded effort bound for " +
                                         n.get_str());
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    throw FactorizationLimit("integer factorization failed for " + n.get_str());
}

void factor_into(const Int& n, std::map<Int, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n)
{
    if (n == 0)
        throw std::domain_error("factor_integer(0)");
    Int m = abs(n);
    std::map<Int, unsigned> found;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++found[Int(p)];
            m /= p;
        }
    }
    factor_into(m, found);
    return {found.begin(), found.end()};
}

Int squarefree_part(const Int& n)
{
    Int out = 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2 == 1)
            out *= p;
    return out;
}

Int ipow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rpow(const Rat& base, unsigned long exp)
{
    return make_rat(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

Int mod_floor(const Int& n, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_floor(const Rat& r, const Int& m)
{
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(r.get_den()).get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible modulo " + m.get_str());
    return mod_floor(Int(Int(r.get_num()) * inv), m);
}

}  // namespace k3
