#pragma once

#include "k3/weil/candidate.hpp"

#include <optional>
#include <vector>

namespace k3 {

struct EnumerateOptions
{
    int max_degree = 8;
    bool integral_only = false;
    /// Keep only candidates with L(1) equal to this value.
    std::optional<Rat> value_at_1;
    /// Drop candidates with L(-1) equal to this value.
    std::optional<Rat> exclude_value_at_minus_1;
    unsigned threads = 1;
};

struct EnumerateStats
{
    unsigned long leaves = 0;     // complete coefficient tuples reached
    unsigned long checked = 0;    // tuples sent through check_all
    unsigned long unknown = 0;    // tuples with an Unknown verdict
};

/// Every admissible candidate of degree two_d over F_q, sorted
/// lexicographically by coefficients. Throws std::domain_error if q is not a
/// prime power or two_d is odd, below 2, or above options.max_degree.
std::vector<WeilCandidate> enumerate(const Int& q, int two_d, const EnumerateOptions& options = {},
                                     EnumerateStats* stats = nullptr);

}  // namespace k3
