#pragma once

#include "k3/qform/invariants.hpp"

namespace k3 {

/// A diagonal form with exactly the given invariants; the output is
/// deterministic. Throws std::domain_error if the tuple is not admissible.
QSpace construct_with_invariants(const QFormInvariants& inv);

}  // namespace k3
