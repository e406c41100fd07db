#include "k3/pipeline/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace k3;

namespace {

struct InputOptions
{
    std::string file;
    std::string json;
};

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    cmd->add_option("-i,--input", in.file, "JSON input file ('-' for stdin, the default)");
    cmd->add_option("--json", in.json, "JSON input given inline");
}

Json read_input(const InputOptions& in)
{
    if (!in.json.empty())
        return parse_json_input(in.json, "<--json>");
    std::string text, source = in.file.empty() || in.file == "-" ? "<stdin>" : in.file;
    if (source == "<stdin>") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(in.file);
        if (!f)
            throw UsageError("cannot open " + in.file);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return parse_json_input(text, source);
}

struct CandidateOptions
{
    InputOptions in;
    std::string L;
    long p = 0;
    long a = 1;
};

void add_candidate_options(CLI::App* cmd, CandidateOptions& c)
{
    add_input_options(cmd, c.in);
    cmd->add_option("--L", c.L, "coefficients of L, ascending, comma separated (e.g. 1,-1/2,1)");
    cmd->add_option("--p", c.p, "characteristic");
    cmd->add_option("--a", c.a, "q = p^a");
}

Json read_candidate(const CandidateOptions& c)
{
    if (c.L.empty())
        return read_input(c.in);
    Json coeffs = Json::array();
    std::stringstream ss(c.L);
    std::string tok;
    while (std::getline(ss, tok, ','))
        coeffs.push_back(tok);
    if (c.p == 0)
        throw UsageError("--L needs --p");
    return {{"L", coeffs}, {"p", c.p}, {"a", c.a}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weil polynomial checks, rational quadratic forms and K3 lattice certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    std::string output;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.add_option("-o,--output", output, "write the result to this file");

    CandidateOptions check_opts;
    auto* check = app.add_subcommand("check", "check the five properties of a candidate");
    add_candidate_options(check, check_opts);

    std::string q_text;
    int two_d = 0;
    EnumerateOptions enum_opts;
    std::string value_at_1, exclude_minus_1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list all admissible candidates");
    enumerate_cmd->add_option("--q", q_text, "field size q = p^a")->required();
    enumerate_cmd->add_option("--two-d", two_d, "degree 2d")->required();
    enumerate_cmd->add_flag("--integral-only", enum_opts.integral_only, "integer coefficients only");
    enumerate_cmd->add_option("--value-at-1", value_at_1, "keep only L(1) equal to this rational");
    enumerate_cmd->add_option("--exclude-value-at-minus-1", exclude_minus_1, "drop L(-1) equal to this rational");
    enumerate_cmd->add_option("--threads", enum_opts.threads, "worker threads");
    enumerate_cmd->add_option("--max-degree", enum_opts.max_degree, "refuse degrees above this bound");

    std::string op;
    InputOptions qform_in;
    auto* qform = app.add_subcommand("qform", "quadratic form invariants, equivalence and construction");
    qform->add_option("--op", op, "invariants | equivalent | admissible | construct | sum | complement")
        ->required();
    add_input_options(qform, qform_in);

    auto* lattice = app.add_subcommand("lattice", "the K3 lattice and its invariants");

    CandidateOptions construct_opts;
    PipelineConfig config;
    bool telemetry = false;
    auto* construct = app.add_subcommand("construct", "full run producing a certificate");
    add_candidate_options(construct, construct_opts);
    construct->add_option("--max-extension-degree", config.max_extension_degree, "largest [E:Q] attempted");
    construct->add_flag("--telemetry", telemetry, "append stage timings");

    CandidateOptions extend_opts;
    int n = 0;
    auto* extend = app.add_subcommand("extend", "base change from F_q to F_{q^n}");
    add_candidate_options(extend, extend_opts);
    extend->add_option("--n", n, "extension degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    CommandResult result;
    try {
        if (*check) {
            result = cmd_check(read_candidate(check_opts));
        } else if (*enumerate_cmd) {
            Int q;
            if (q.set_str(q_text, 10) != 0)
                throw UsageError("--q must be an integer");
            if (!value_at_1.empty())
                enum_opts.value_at_1 = parse_rat(value_at_1);
            if (!exclude_minus_1.empty())
                enum_opts.exclude_value_at_minus_1 = parse_rat(exclude_minus_1);
            result = cmd_enumerate(q, two_d, enum_opts);
        } else if (*qform) {
            result = cmd_qform(op, read_input(qform_in));
        } else if (*lattice) {
            result = cmd_lattice();
        } else if (*construct) {
            result = cmd_construct(read_candidate(construct_opts), config, telemetry);
        } else if (*extend) {
            result = cmd_extend(read_candidate(extend_opts), n);
        }
    } catch (const UsageError& e) {
        std::cerr << "httool: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "httool: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "httool: internal error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = render(result.output, pretty);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "httool: cannot write " << output << "\n";
            return 3;
        }
        f << text;
    }
    return result.exit_code;
}
