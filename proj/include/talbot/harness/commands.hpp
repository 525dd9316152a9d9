#pragma once

#include <ostream>

#include "talbot/harness/run_config.hpp"

namespace talbot::harness {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitVerificationFailure = 1,
    kExitUsage = 2,
};

/// Dispatches on config.command. Invalid parameters and IO failures are
/// reported on err and return kExitUsage.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_carpet(const RunConfig& config, std::ostream& out);
int cmd_gate(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_fidelity(const RunConfig& config, std::ostream& out);
int cmd_prepare(const RunConfig& config, std::ostream& out);
int cmd_czgate(const RunConfig& config, std::ostream& out);

}  // namespace talbot::harness
