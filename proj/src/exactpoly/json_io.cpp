#include "k3/exactpoly/json_io.hpp"

#include <stdexcept>

namespace k3 {

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(Int(j.dump()));
    throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

Json poly_to_json(const Poly& f)
{
    Json arr = Json::array();
    for (const auto& c : f.coefficients())
        arr.push_back(rat_to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a coefficient array, got " + j.dump());
    std::vector<Rat> c;
    for (const auto& x : j)
        c.push_back(rat_from_json(x));
    return Poly(std::move(c));
}

Json square_class_to_json(const SquareClass& c) { return to_string(c); }

}  // namespace k3
