#pragma once

#include "k3/weil/candidate.hpp"

#include <string>
#include <vector>

namespace k3 {

struct PipelineConfig
{
    /// Runs that need [E:Q] above this stop with status Unknown.
    int max_extension_degree = 20;
};

enum class RunStatus { Constructed, ExistenceOnly, Rejected, Unknown };
std::string to_string(RunStatus s);

struct RunOutcome
{
    RunStatus status = RunStatus::Unknown;
    /// Deterministic certificate (no timing data).
    Json certificate;
    /// Wall-clock timings per stage, in milliseconds.
    Json telemetry = Json::object();
};

/// check_all -> weil_field -> build_extension -> completion check ->
/// find_lambda -> trace form -> complement. Mathematical failures become
/// statuses; only invalid input throws (std::invalid_argument).
RunOutcome run(const WeilCandidate& c, const PipelineConfig& config = {});

/// Re-derives every embedded verdict of a certificate from its own data.
/// Returns a list of discrepancies (empty when the certificate is valid).
std::vector<std::string> validate_certificate(const Json& certificate);

/// 0 Constructed / ExistenceOnly, 1 Rejected, 2 Unknown.
int exit_code(RunStatus s);

}  // namespace k3
