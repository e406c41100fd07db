#include "k3/exactpoly/arith.hpp"
#include "k3/exactpoly/cyclotomic.hpp"
#include "k3/exactpoly/factor.hpp"
#include "k3/exactpoly/json_io.hpp"
#include "k3/exactpoly/modpoly.hpp"
#include "k3/exactpoly/poly.hpp"
#include "k3/exactpoly/real_roots.hpp"
#include "k3/exactpoly/resultant.hpp"
#include "k3/exactpoly/square_class.hpp"

#include "oracles/numeric_roots.hpp"
#include "oracles/root_subsets.hpp"
#include "oracles/sylvester.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace k3;

namespace {

Rat R(const char* s) { return parse_rat(s); }

Poly random_poly(std::mt19937_64& rng, int deg, int range, int max_den = 1)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
    std::vector<Rat> c(deg + 1);
    for (auto& x : c)
        x = make_rat(num(rng), den(rng));
    if (c.back() == 0)
        c.back() = 1;
    return Poly(c);
}

std::map<std::string, int> as_multiset(const Factorization& f)
{
    std::map<std::string, int> m;
    for (const auto& fp : f.factors)
        m[poly_to_json(fp.factor).dump()] += fp.multiplicity;
    return m;
}

}  // namespace

TEST_CASE("rationals parse, print and reduce")
{
    CHECK(to_string(R("6/4")) == "3/2");
    CHECK(to_string(R("-7")) == "-7");
    CHECK(to_string(R("0/5")) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK(mod_floor(R("1/2"), Int(5)) == 3);
    CHECK(mod_floor(Int(-3), Int(5)) == 2);
    CHECK_THROWS_AS(mod_floor(R("1/5"), Int(5)), std::domain_error);
}

TEST_CASE("integer factorization and squarefree parts")
{
    auto f = factor_integer(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(Int(2), 3u));
    CHECK(f[1] == std::make_pair(Int(3), 2u));
    CHECK(f[2] == std::make_pair(Int(5), 1u));
    Int big = Int("1000000007") * Int("998244353") * 12;
    Int prod = 1;
    for (auto& [p, e] : factor_integer(big)) {
        CHECK(is_prime(p));
        prod *= ipow(p, e);
    }
    CHECK(prod == big);
    CHECK(squarefree_part(Int(-18)) == 2);
    CHECK(squarefree_part(Int(1)) == 1);
    CHECK_THROWS_AS(factor_integer(Int(0)), std::domain_error);
}

TEST_CASE("polynomial arithmetic")
{
    Poly t = Poly::variable();
    Poly f = t * t - Poly::constant(1);
    CHECK(f.degree() == 2);
    CHECK(Poly().degree() == -1);
    CHECK((f - f).is_zero());
    CHECK(f(Rat(3)) == 8);
    CHECK(f.derivative() == Poly{0, 2});
    CHECK(Poly({1, 2, 3}).reversed() == Poly({3, 2, 1}));
    CHECK(Poly({1, 0, 1}).compose(Poly{1, 1}) == Poly({2, 2, 1}));
    CHECK(Poly({1, 1, 1}).scale_variable(2) == Poly({1, 2, 4}));
    CHECK(gcd(f, Poly{-1, 1}) == Poly{-1, 1});
    CHECK(Poly({R("1/2"), R("3/4")}).content() == R("1/4"));
    CHECK(Poly({R("-1/2"), R("-3/4")}).primitive_part() == Poly({-2, -3}));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 1 + static_cast<int>(rng() % 7), 9, 4);
        Poly b = random_poly(rng, static_cast<int>(rng() % 5), 9, 4);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        auto eg = extended_gcd(a, b);
        CHECK(eg.s * a + eg.t * b == eg.g);
        CHECK(divides(eg.g, a));
        CHECK(divides(eg.g, b));
    }
}

TEST_CASE("squarefree decomposition reassembles the input")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(rng, 1 + static_cast<int>(rng() % 3), 5);
        Poly b = random_poly(rng, 1 + static_cast<int>(rng() % 3), 5);
        Poly f = a * b.pow(2) * Poly{R("1/3"), 1}.pow(3) * Rat(7);
        Poly prod = Poly::constant(f.leading());
        for (auto& [g, m] : squarefree_decomposition(f)) {
            CHECK(is_squarefree(g));
            CHECK(g.leading() == 1);
            prod *= g.pow(m);
        }
        CHECK(prod == f);
    }
}

TEST_CASE("interpolation and reciprocal power sums")
{
    std::vector<Rat> xs{0, 1, 2, 3}, ys{1, 3, 11, 31};
    Poly p = interpolate(xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(p(xs[i]) == ys[i]);
    CHECK(p == Poly({1, 1, 0, 1}));

    // (1 - 2T)(1 - 3T): power sums 2^k + 3^k.
    auto s = reciprocal_power_sums(Poly{1, -2} * Poly{1, -3}, 4);
    CHECK(s == std::vector<Rat>{5, 13, 35, 97});
}

TEST_CASE("factor_over_Q examples")
{
    auto f1 = factor_over_Q(Poly{-1, 0, 1});
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].factor == Poly{-1, 1});
    CHECK(f1.factors[1].factor == Poly{1, 1});
    CHECK(f1.unit == 1);

    Poly quartic{1, 0, R("1/2"), 0, 1};
    auto f2 = factor_over_Q(quartic);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].factor == quartic);
    CHECK(f2.factors[0].multiplicity == 1);
    CHECK_FALSE(oracle::small_factor(quartic).has_value());

    Poly q{1, R("-1/2"), 1};
    auto f3 = factor_over_Q(q.pow(2));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].factor == q);
    CHECK(f3.factors[0].multiplicity == 2);

    CHECK_THROWS_AS(factor_over_Q(Poly{}), std::domain_error);
}

TEST_CASE("factorization of hard and high-degree inputs")
{
    // Irreducible but splits into small factors modulo every prime.
    Poly sd{1, 0, -10, 0, 1};
    CHECK(is_irreducible_over_Q(sd));
    CHECK_FALSE(oracle::small_factor(sd).has_value());

    // T^24 - 1 is the product of Phi_d for d | 24.
    auto f = factor_over_Q(Poly::monomial(1, 24) - Poly::constant(1));
    std::vector<Poly> expected;
    for (unsigned long d : {1, 2, 3, 4, 6, 8, 12, 24})
        expected.push_back(cyclotomic(d));
    std::sort(expected.begin(), expected.end());
    REQUIRE(f.factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(f.factors[i].factor == expected[i]);

    // A degree-20 product with large coefficients.
    Poly a{3, -7, 0, 11, 0, 0, 5};
    Poly b{R("1/2"), 0, 13, 0, 0, 0, 0, 0, 1};
    Poly c{-17, 1, 1, 0, 0, 1};
    Poly prod = a * b * c.pow(2);
    auto g = factor_over_Q(prod);
    CHECK(g.expand() == prod);
    CHECK(g.factors.size() == 3);
}

TEST_CASE("factorization refines products of random polynomials")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        Poly a = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6, 3);
        Poly b = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6, 3);
        auto fa = factor_over_Q(a), fb = factor_over_Q(b), fab = factor_over_Q(a * b);
        CHECK(fab.expand() == a * b);
        auto ma = as_multiset(fa), mb = as_multiset(fb), mab = as_multiset(fab);
        for (auto& [k, v] : mb)
            ma[k] += v;
        CHECK(ma == mab);
        for (const auto& fp : fab.factors)
            CHECK_FALSE(oracle::small_factor(fp.factor).has_value());
    }
}

TEST_CASE("sturm_count examples")
{
    CHECK(sturm_count(Poly{0, -1, 0, 1}) == 3);
    CHECK(sturm_count(Poly{R("-3/2"), 0, 1}, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_count(Poly{1, 0, 1}) == 0);
    // Half-open: a root at the right end counts, at the left end does not.
    CHECK(sturm_count(Poly{0, 1}, Rat(-1), Rat(0)) == 1);
    CHECK(sturm_count(Poly{0, 1}, Rat(0), Rat(1)) == 0);
    // Repeated roots are counted once.
    CHECK(sturm_count(Poly{-1, 1}.pow(3) * Poly{2, 1}) == 2);
    CHECK_THROWS_AS(sturm_count(Poly{}), std::domain_error);
}

TEST_CASE("sturm_count agrees with numeric roots")
{
    std::mt19937_64 rng(14);
    for (int i = 0; i < 80; ++i) {
        Poly f = random_poly(rng, 1 + static_cast<int>(rng() % 8), 12, 3);
        f = squarefree_part(f);
        if (f.degree() < 1)
            continue;
        auto z = oracle::roots(f);
        int real = 0;
        for (auto& r : z)
            if (abs(r.imag()) < oracle::Real("1e-40"))
                ++real;
        CHECK(sturm_count(f) == real);
        CHECK((f.degree() - real) % 2 == 0);
        auto iv = isolate_real_roots(f);
        CHECK(static_cast<int>(iv.size()) == real);
        for (std::size_t k = 0; k + 1 < iv.size(); ++k)
            CHECK(iv[k].hi <= iv[k + 1].lo);
    }
}

TEST_CASE("simplest rational in an interval")
{
    CHECK(simplest_between(R("1/3"), R("1/2")) == R("2/5"));
    CHECK(simplest_between(Rat(0), R("1/2")) == R("1/3"));
    CHECK(simplest_between(R("-7/3"), R("-2")) == R("-9/4"));
    CHECK(simplest_between(R("-1"), R("5")) == 0);
    CHECK(simplest_between(R("3/2"), R("7/2")) == 2);
    CHECK_THROWS(simplest_between(Rat(1), Rat(1)));
}

TEST_CASE("resultant examples and Sylvester oracle")
{
    CHECK(resultant(Poly{-2, 1}, Poly{-3, 1}) == -1);
    CHECK(resultant(Poly{-2, 0, 1}, Poly{-2, 0, 1}) == 0);
    CHECK(resultant(Poly{1, 0, 1}, Poly{-2, 0, 1}) == 9);
    CHECK(discriminant(Poly{1, 0, 1}) == -4);
    CHECK(discriminant(Poly{1, 1, 1}) == -3);

    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(rng, static_cast<int>(rng() % 6), 7, 3);
        Poly g = random_poly(rng, static_cast<int>(rng() % 6), 7, 3);
        CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
    }
}

TEST_CASE("compose_roots and minpoly_of_beta")
{
    // Roots of T^2 - 2 squared: both 2.
    CHECK(compose_roots(Poly{-2, 0, 1}, Poly{0, 0, 1}) == Poly{-2, 1}.pow(2));
    CHECK(compose_roots(Poly{1, 1}, Poly::constant(5)) == Poly{-5, 1});

    CHECK(minpoly_of_beta(Poly{1, 0, R("1/2"), 0, 1}) == Poly{R("-3/2"), 0, 1});
    CHECK(minpoly_of_beta(Poly{1, 0, 1}) == Poly{0, 1});
    CHECK(minpoly_of_beta(Poly{1, R("-1/2"), 1}) == Poly{R("-1/2"), 1});
    CHECK_THROWS_AS(minpoly_of_beta(Poly{-1, 0, 1}), std::domain_error);

    // Substituting T + 1/T and clearing T^k gives a multiple of f.
    std::vector<Poly> fixtures{Poly{1, 0, R("1/2"), 0, 1}, Poly{1, R("-1/2"), 1},
                               cyclotomic(5), cyclotomic(7), cyclotomic(15),
                               Poly{1, R("3/4"), R("5/4"), R("3/4"), 1}};
    for (const auto& f : fixtures) {
        if (!is_irreducible_over_Q(f))
            continue;
        Poly m = minpoly_of_beta(f);
        CHECK(2 * m.degree() == f.degree());
        // sum m_k (T^2 + 1)^k T^(deg m - k)
        const int dm = m.degree();
        Poly acc;
        for (int k = 0; k <= dm; ++k)
            acc += Poly{1, 0, 1}.pow(k) * Poly::monomial(m.coeff(k), dm - k);
        CHECK(divides(f, acc));
    }
}

TEST_CASE("cyclotomic polynomials are recognized exhaustively")
{
    CHECK(is_cyclotomic(Poly{1, 1, 1}) == 3UL);
    CHECK(is_cyclotomic(Poly{1, -1, 1}) == 6UL);
    CHECK_FALSE(is_cyclotomic(Poly{1, R("1/2"), 1}).has_value());
    CHECK_FALSE(is_cyclotomic(Poly{1, 3, 1}).has_value());
    for (unsigned long n = 1; n <= 200; ++n) {
        if (euler_phi(n) > 20)
            continue;
        CHECK(is_cyclotomic(cyclotomic(n)) == n);
    }
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
}

TEST_CASE("square classes")
{
    CHECK(square_class(Rat(4)) == SquareClass{1, 1});
    CHECK(square_class(Rat(-18)) == SquareClass{-1, 2});
    CHECK(square_class(R("7/9")) == SquareClass{1, 7});
    CHECK(square_class(R("3/2")) == SquareClass{1, 6});
    CHECK_THROWS_AS(square_class(Rat(0)), std::domain_error);
    CHECK(square_class(Rat(6)) * square_class(Rat(-10)) == SquareClass{-1, 15});

    std::mt19937_64 rng(16);
    std::uniform_int_distribution<int> d(-60, 60), e(1, 40);
    for (int i = 0; i < 300; ++i) {
        Rat r = make_rat(d(rng), e(rng));
        if (r == 0)
            continue;
        Rat s = make_rat(d(rng), e(rng));
        if (s == 0)
            continue;
        CHECK(square_class(r * s * s) == square_class(r));
    }
}

TEST_CASE("finite field polynomials")
{
    using namespace modp;
    const std::uint64_t p = 7;
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        MPoly a, b;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 6); ++k)
            a.push_back(rng() % p);
        for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k)
            b.push_back(rng() % p);
        a.push_back(1);
        b.push_back(1);
        MPoly f = mul(mul(a, b, p), b, p);
        MPoly prod{1};
        for (auto& fac : factor(f, p)) {
            CHECK(fac.poly.back() == 1);
            for (int m = 0; m < fac.multiplicity; ++m)
                prod = mul(prod, fac.poly, p);
            // Irreducibility of degree <= 3 factors: no root in F_p.
            if (degree(fac.poly) >= 2 && degree(fac.poly) <= 3)
                for (std::uint64_t x = 0; x < p; ++x) {
                    std::uint64_t v = 0;
                    for (std::size_t k = fac.poly.size(); k-- > 0;)
                        v = (v * x + fac.poly[k]) % p;
                    CHECK(v != 0);
                }
        }
        CHECK(prod == f);
    }
    // x^4 + x + 1 is irreducible over F_2; x^2 + 1 = (x + 1)^2 there.
    CHECK(is_irreducible(MPoly{1, 1, 0, 0, 1}, 2));
    auto sq = factor(MPoly{1, 0, 1}, 2);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].multiplicity == 2);
    // x^9 - x over F_3 splits into all linear factors.
    MPoly x9(10, 0);
    x9[9] = 1;
    x9[1] = 2;
    CHECK(factor(x9, 3).size() == 3 + 3);
}

TEST_CASE("json round trip")
{
    Poly f{1, R("-1/2"), 1};
    Json j = poly_to_json(f);
    CHECK(j.dump() == R"(["1","-1/2","1"])");
    CHECK(poly_from_json(j) == f);
    CHECK(poly_from_json(Json::parse(R"([1, "3/6", 0])")) == Poly{1, R("1/2")});
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"(["x"])")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"a":1})")), std::invalid_argument);
}
