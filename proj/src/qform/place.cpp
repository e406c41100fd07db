#include "k3/qform/place.hpp"

#include <stdexcept>

namespace k3 {

Place Place::prime(const Int& p)
{
    if (!is_prime(p))
        throw std::domain_error("invalid place: " + p.get_str() + " is not prime");
    return Place(p);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : p_.get_str(); }

Place Place::parse(const std::string& text)
{
    if (text == "inf")
        return infinity();
    Int p;
    if (text.empty() || p.set_str(text, 10) != 0)
        throw std::invalid_argument("invalid place '" + text + "'");
    if (!is_prime(p))
        throw std::invalid_argument("invalid place '" + text + "': not prime");
    return Place(p);
}

bool operator<(const Place& a, const Place& b)
{
    if (a.is_infinite() || b.is_infinite())
        return !a.is_infinite() && b.is_infinite();
    return a.p_ < b.p_;
}

}  // namespace k3
