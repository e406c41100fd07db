#include "k3/weil/candidate.hpp"

#include <stdexcept>

namespace k3 {

void validate(const WeilCandidate& c)
{
    if (!is_prime(c.p))
        throw std::invalid_argument("p = " + c.p.get_str() + " is not prime");
    if (c.a < 1)
        throw std::invalid_argument("a must be at least 1");
    if (c.L.degree() < 2 || c.L.degree() % 2)
        throw std::invalid_argument("L must have even degree at least 2");
    if (c.L.coeff(0) != 1)
        throw std::invalid_argument("L(0) must be 1");
}

Json to_json(const WeilCandidate& c)
{
    return {{"L", poly_to_json(c.L)}, {"p", std::stol(c.p.get_str())}, {"a", c.a}};
}

WeilCandidate candidate_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("L") || !j.contains("p"))
        throw std::invalid_argument("candidate needs fields \"L\" and \"p\"");
    WeilCandidate c;
    c.L = poly_from_json(j.at("L"));
    if (!j.at("p").is_number_integer())
        throw std::invalid_argument("\"p\" must be an integer");
    c.p = Int(j.at("p").get<long>());
    c.a = 1;
    if (j.contains("a")) {
        if (!j.at("a").is_number_integer())
            throw std::invalid_argument("\"a\" must be an integer");
        c.a = j.at("a").get<long>();
    }
    validate(c);
    return c;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "Pass";
    case Verdict::Fail:
        return "Fail";
    case Verdict::Unknown:
        return "Unknown";
    case Verdict::NotApplicable:
        return "NotApplicable";
    }
    return "?";
}

}  // namespace k3
