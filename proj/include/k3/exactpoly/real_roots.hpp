#pragma once

#include "k3/exactpoly/poly.hpp"

#include <optional>
#include <vector>

namespace k3 {

/// An endpoint of a real interval; nullopt stands for -inf on the left and
/// +inf on the right.
using Bound = std::optional<Rat>;

/// Sturm sequence of the squarefree part of f. Repeated roots are counted once.
class SturmChain
{
  public:
    explicit SturmChain(const Poly& f);

    /// Distinct real roots in the half-open interval (lo, hi].
    int count(const Bound& lo, const Bound& hi) const;
    int count_all() const { return count(std::nullopt, std::nullopt); }

    const Poly& squarefree() const { return chain_.front(); }

  private:
    int variations_at(const Rat& x) const;
    int variations_at_infinity(bool positive) const;
    std::vector<Poly> chain_;
};

/// Number of distinct real roots of f in (lo, hi]. Throws on the zero polynomial.
int sturm_count(const Poly& f, const Bound& lo = std::nullopt, const Bound& hi = std::nullopt);

/// Half-open interval (lo, hi] with rational endpoints.
struct RootInterval
{
    Rat lo, hi;
};

/// Disjoint intervals, in increasing order, each holding exactly one distinct
/// real root of f.
std::vector<RootInterval> isolate_real_roots(const Poly& f);

/// Halves an isolating interval of a root of the squarefree polynomial f.
RootInterval bisect(const SturmChain& chain, const RootInterval& iv);

/// The rational with smallest denominator (then smallest absolute numerator)
/// in the open interval (lo, hi).
Rat simplest_between(const Rat& lo, const Rat& hi);

/// Cauchy bound: every complex root z of f has |z| < bound.
Rat root_bound(const Poly& f);

}  // namespace k3
