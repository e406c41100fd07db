#pragma once

#include "k3/exactpoly/arith.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace k3 {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
class Poly
{
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, std::size_t degree);
    /// The indeterminate T.
    static Poly variable();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Rat>& coefficients() const { return c_; }
    /// Coefficient of T^i; zero beyond the degree.
    Rat coeff(std::size_t i) const;
    const Rat& leading() const;

    Rat operator()(const Rat& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    /// Scaled so the leading coefficient is 1. Zero stays zero.
    Poly monic() const;
    /// T^deg * f(1/T).
    Poly reversed() const;
    /// f(g(T)).
    Poly compose(const Poly& g) const;
    /// f(c*T).
    Poly scale_variable(const Rat& c) const;
    Poly pow(unsigned e) const;

    /// Positive rational c with f / c primitive in Z[T] and a positive leading
    /// coefficient sign preserved (f = c * sgn * primitive).
    Rat content() const;
    /// f / |content|: integer coefficients with gcd 1, same sign as f.
    Poly primitive_part() const;
    std::vector<Int> integer_coefficients() const;

    /// Deterministic order: degree, then coefficients lexicographically.
    friend bool operator<(const Poly& a, const Poly& b);

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& f);

/// Monic gcd (zero iff both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Extended gcd: s*a + t*b = g with g monic.
struct ExtendedGcd
{
    Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// f / gcd(f, f'), monic.
Poly squarefree_part(const Poly& f);
bool is_squarefree(const Poly& f);

/// Yun's decomposition: f = lc * prod a_i^i with a_i monic squarefree and
/// pairwise coprime; entries with a_i = 1 are omitted.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Newton interpolation through (xs[i], ys[i]), xs distinct.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Power sums s_1..s_count of the reciprocal roots of f, where
/// f = f(0) * prod (1 - gamma_i T) and f(0) != 0.
std::vector<Rat> reciprocal_power_sums(const Poly& f, std::size_t count);

}  // namespace k3
