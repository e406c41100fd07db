#pragma once

#include "k3/cmfield/number_field.hpp"

namespace k3 {

enum class SplitStatus { AllSplit, NotAllSplit, Unknown };
std::string to_string(SplitStatus s);

struct SplitResult
{
    SplitStatus status = SplitStatus::Unknown;
    std::string reason;
    Json witness = Json::object();
};

/// Whether every place of E0 above the odd prime p splits in E0(sqrt D).
/// Unknown for p = 2, and for p dividing disc(E0.defining), a coefficient
/// denominator, or the norm of D.
SplitResult split_test(const NumberField& E0, const Poly& D, const Int& p);

}  // namespace k3
