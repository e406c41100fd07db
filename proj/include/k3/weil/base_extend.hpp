#pragma once

#include "k3/weil/candidate.hpp"

namespace k3 {

/// The candidate with reciprocal roots gamma_i^n over F_{q^n}.
/// Throws std::domain_error for n == 0.
WeilCandidate base_extend(const WeilCandidate& c, unsigned n);

}  // namespace k3
