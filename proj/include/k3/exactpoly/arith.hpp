#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k3 {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational num/den (den != 0).
Rat make_rat(const Int& num, const Int& den = 1);

/// Parses "num/den" or "num" (decimal, optional leading '-').
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// "num/den", with "/den" omitted when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

int sign(const Rat& r);
int sign(const Int& n);

bool is_integer(const Rat& r);

bool is_prime(const Int& n);
bool is_prime(long n);

/// Smallest prime strictly greater than n.
long next_prime(long n);

/// A composite factor resisted the Pollard-Brent effort bound.
struct FactorizationLimit : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Prime factorization of |n| for n != 0, primes ascending.
/// Throws std::domain_error for n == 0, and FactorizationLimit if a factor
/// resists the effort bound.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

/// Product of the primes dividing |n| to an odd power (n != 0).
Int squarefree_part(const Int& n);

Int ipow(const Int& base, unsigned long exp);
Rat rpow(const Rat& base, unsigned long exp);

/// Reduces n into [0, m).
Int mod_floor(const Int& n, const Int& m);

/// Reduces a rational with denominator prime to m into [0, m).
/// Throws std::domain_error when the denominator is not invertible.
Int mod_floor(const Rat& r, const Int& m);

}  // namespace k3
