#pragma once

#include "k3/exactpoly/json_io.hpp"
#include "k3/exactpoly/poly.hpp"

#include <string>

namespace k3 {

/// A candidate transcendental factor L of degree 2d over F_q, q = p^a.
struct WeilCandidate
{
    Poly L;
    Int p;
    long a = 1;

    int degree() const { return L.degree(); }
    int half_degree() const { return L.degree() / 2; }
    Int q() const { return ipow(p, static_cast<unsigned long>(a)); }
};

/// Throws std::invalid_argument unless L(0) = 1, deg L is even and >= 2,
/// p is prime and a >= 1.
void validate(const WeilCandidate& c);

/// {"L": [...], "p": int, "a": int}
Json to_json(const WeilCandidate& c);
WeilCandidate candidate_from_json(const Json& j);

enum class Verdict { Pass, Fail, Unknown, NotApplicable };
std::string to_string(Verdict v);

}  // namespace k3
