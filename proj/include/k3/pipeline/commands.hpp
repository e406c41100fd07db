#pragma once

#include "k3/pipeline/run.hpp"
#include "k3/weil/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace k3 {

/// Bad invocation or malformed input; the CLI exits with code 3.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct CommandResult
{
    Json output;
    int exit_code = 0;
};

/// Parses JSON text; on failure throws UsageError with "source:line:column".
Json parse_json_input(const std::string& text, const std::string& source);

/// 0 admissible, 1 some property fails, 2 undecided.
CommandResult cmd_check(const Json& candidate);
CommandResult cmd_enumerate(const Int& q, int two_d, const EnumerateOptions& options);
/// op is one of invariants, equivalent, admissible, construct, sum, complement.
CommandResult cmd_qform(const std::string& op, const Json& input);
CommandResult cmd_lattice();
CommandResult cmd_construct(const Json& candidate, const PipelineConfig& config, bool telemetry);
CommandResult cmd_extend(const Json& candidate, int n);

/// Compact JSON, or an indented key: value rendering for humans.
std::string render(const Json& j, bool pretty);

}  // namespace k3
