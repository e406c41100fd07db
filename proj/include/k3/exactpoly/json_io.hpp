#pragma once

#include "k3/exactpoly/poly.hpp"
#include "k3/exactpoly/square_class.hpp"

#include <json.hpp>

namespace k3 {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
/// Accepts "num/den" strings and JSON integers; throws std::invalid_argument.
Rat rat_from_json(const Json& j);

Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j);

Json square_class_to_json(const SquareClass& c);

}  // namespace k3
