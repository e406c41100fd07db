#pragma once

#include "k3/exactpoly/arith.hpp"

#include <string>

namespace k3 {

/// A place of Q: a prime, or the real place (stored as prime 0).
/// Ordered by prime with the real place last.
class Place
{
  public:
    static Place infinity() { return Place(); }
    /// Throws std::domain_error unless p is prime.
    static Place prime(const Int& p);

    bool is_infinite() const { return p_ == 0; }
    const Int& p() const { return p_; }

    /// "inf" or the decimal prime.
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument.
    static Place parse(const std::string& text);

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
    friend bool operator<(const Place& a, const Place& b);

  private:
    Place() = default;
    explicit Place(Int p) : p_(std::move(p)) {}
    Int p_ = 0;
};

}  // namespace k3
