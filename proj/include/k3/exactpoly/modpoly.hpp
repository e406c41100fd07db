#pragma once

#include "k3/exactpoly/poly.hpp"

#include <cstdint>
#include <vector>

namespace k3::modp {

/// Polynomial over F_p, ascending coefficients in [0, p), no trailing zeros.
/// The prime is carried separately; p must be below 2^32.
using MPoly = std::vector<std::uint64_t>;

void trim(MPoly& f);
int degree(const MPoly& f);

/// Reduces a rational polynomial mod p; throws std::domain_error if a
/// denominator is divisible by p.
MPoly reduce(const Poly& f, std::uint64_t p);
/// Lift with coefficients in [0, p).
Poly lift(const MPoly& f);

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t p);

MPoly add(const MPoly& a, const MPoly& b, std::uint64_t p);
MPoly sub(const MPoly& a, const MPoly& b, std::uint64_t p);
MPoly mul(const MPoly& a, const MPoly& b, std::uint64_t p);
MPoly scale(const MPoly& a, std::uint64_t c, std::uint64_t p);
void divmod(const MPoly& a, const MPoly& b, std::uint64_t p, MPoly& q, MPoly& r);
MPoly rem(const MPoly& a, const MPoly& b, std::uint64_t p);
MPoly quot(const MPoly& a, const MPoly& b, std::uint64_t p);
MPoly monic(const MPoly& a, std::uint64_t p);
MPoly derivative(const MPoly& a, std::uint64_t p);
/// Monic gcd.
MPoly gcd(const MPoly& a, const MPoly& b, std::uint64_t p);
/// s*a + t*b = gcd (monic).
void extended_gcd(const MPoly& a, const MPoly& b, std::uint64_t p, MPoly& g, MPoly& s, MPoly& t);
/// base^e mod m, for an arbitrary-size exponent.
MPoly powmod(const MPoly& base, const Int& e, const MPoly& m, std::uint64_t p);

struct Factor
{
    MPoly poly;  // monic irreducible
    int multiplicity;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// sorted by degree then coefficients. The leading coefficient is dropped.
std::vector<Factor> factor(const MPoly& f, std::uint64_t p);
bool is_irreducible(const MPoly& f, std::uint64_t p);

}  // namespace k3::modp
