#include "k3/pipeline/commands.hpp"

#include "k3/qform/construct.hpp"
#include "k3/qform/lattice.hpp"
#include "k3/weil/base_extend.hpp"
#include "k3/weil/checks.hpp"

#include <sstream>

namespace k3 {

namespace {

WeilCandidate candidate_of(const Json& j)
{
    try {
        return candidate_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid candidate: ") + e.what());
    } catch (const Json::exception& e) {
        throw UsageError(std::string("invalid candidate: ") + e.what());
    }
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw UsageError(std::string("input needs the field \"") + key + "\"");
    return j.at(key);
}

QSpace space_of(const Json& j)
{
    if (j.is_object() && j.contains("gram"))
        return diagonalize(gram_from_json(j.at("gram")));
    return qspace_from_json(j);
}

Json header(const char* kind)
{
    return {{"schema_version", 1}, {"kind", kind}};
}

void render_into(std::ostringstream& out, const Json& j, int indent)
{
    const std::string pad(indent, ' ');
    auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    auto flat = [](const Json& x) {
        if (!x.is_array())
            return false;
        for (const auto& e : x)
            if (e.is_structured())
                return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty() && !flat(v)) {
                out << pad << k << ":\n";
                render_into(out, v, indent + 2);
            } else if (flat(v)) {
                out << pad << k << ": [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    out << (i ? ", " : "") << scalar(v[i]);
                out << "]\n";
            } else {
                out << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (flat(v)) {
                out << pad << "- [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    out << (i ? ", " : "") << scalar(v[i]);
                out << "]\n";
            } else if (v.is_structured()) {
                out << pad << "-\n";
                render_into(out, v, indent + 2);
            } else {
                out << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

}  // namespace

Json parse_json_input(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto cut = msg.find(": ", msg.find("column"));
        if (cut != std::string::npos)
            msg = msg.substr(cut + 2);
        throw UsageError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": malformed JSON: " + msg);
    }
}

CommandResult cmd_check(const Json& candidate)
{
    WeilReport rep = check_all(candidate_of(candidate));
    CommandResult r;
    r.output = to_json(rep);
    r.exit_code = rep.admissible() ? 0 : !rep.failures().empty() ? 1 : 2;
    return r;
}

CommandResult cmd_enumerate(const Int& q, int two_d, const EnumerateOptions& options)
{
    EnumerateStats stats;
    std::vector<WeilCandidate> found;
    try {
        found = enumerate(q, two_d, options, &stats);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    CommandResult r;
    r.output = header("census");
    r.output["q"] = q.get_str();
    r.output["two_d"] = two_d;
    r.output["integral_only"] = options.integral_only;
    r.output["count"] = found.size();
    Json list = Json::array();
    for (const auto& c : found)
        list.push_back(to_json(c));
    r.output["candidates"] = list;
    r.output["stats"] = {{"leaves", stats.leaves}, {"checked", stats.checked}, {"unknown", stats.unknown}};
    r.exit_code = stats.unknown ? 2 : 0;
    return r;
}

CommandResult cmd_qform(const std::string& op, const Json& in)
{
    CommandResult r;
    r.output = header("qform");
    r.output["op"] = op;
    try {
        if (op == "invariants") {
            QSpace v = space_of(in);
            r.output["diagonal"] = to_json(v)["diagonal"];
            r.output["invariants"] = to_json(invariants(v));
        } else if (op == "equivalent") {
            auto a = invariants(space_of(field(in, "V")));
            auto b = invariants(space_of(field(in, "W")));
            r.output["equivalent"] = a == b;
            r.output["V"] = to_json(a);
            r.output["W"] = to_json(b);
        } else if (op == "admissible" || op == "construct") {
            auto inv = invariants_from_json(in.contains("invariants") ? in.at("invariants") : in);
            std::string why;
            bool ok = admissible(inv, &why);
            r.output["invariants"] = to_json(inv);
            r.output["admissible"] = ok;
            r.output["reason"] = ok ? Json(nullptr) : Json(why);
            if (op == "construct")
                r.output["diagonal"] = ok ? to_json(construct_with_invariants(inv))["diagonal"] : Json(nullptr);
            r.exit_code = ok ? 0 : 1;
        } else if (op == "sum") {
            auto a = invariants_from_json(field(in, "A"));
            auto b = invariants_from_json(field(in, "B"));
            r.output["invariants"] = to_json(sum_invariants(a, b));
        } else if (op == "complement") {
            auto sub = invariants_from_json(field(in, "sub"));
            auto whole = invariants_from_json(field(in, "whole"));
            auto x = complement_invariants(sub, whole);
            std::string why;
            bool ok = admissible(x, &why);
            r.output["invariants"] = to_json(x);
            r.output["admissible"] = ok;
            r.output["reason"] = ok ? Json(nullptr) : Json(why);
            r.exit_code = ok ? 0 : 1;
        } else {
            throw UsageError("unknown qform op '" + op + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    } catch (const Json::exception& e) {
        throw UsageError(e.what());
    }
    return r;
}

CommandResult cmd_lattice()
{
    GramMatrix g = k3_lattice();
    CommandResult r;
    r.output = header("k3_lattice");
    r.output["rank"] = g.size();
    r.output["gram"] = gram_to_json(g);
    r.output["determinant"] = to_string(determinant(g));
    r.output["invariants"] = to_json(invariants(diagonalize(g)));
    return r;
}

CommandResult cmd_construct(const Json& candidate, const PipelineConfig& config, bool telemetry)
{
    RunOutcome out = run(candidate_of(candidate), config);
    CommandResult r;
    r.output = std::move(out.certificate);
    if (telemetry)
        r.output["telemetry"] = out.telemetry;
    r.exit_code = exit_code(out.status);
    return r;
}

CommandResult cmd_extend(const Json& candidate, int n)
{
    if (n < 1)
        throw UsageError("--n must be a positive integer");
    WeilCandidate c = candidate_of(candidate);
    CommandResult r;
    r.output = header("base_extension");
    r.output["n"] = n;
    r.output["input"] = to_json(c);
    r.output["output"] = to_json(base_extend(c, n));
    return r;
}

std::string render(const Json& j, bool pretty)
{
    if (!pretty)
        return j.dump() + "\n";
    std::ostringstream out;
    render_into(out, j, 0);
    return out.str();
}

}  // namespace k3
