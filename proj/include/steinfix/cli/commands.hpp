#pragma once

#include <ostream>

#include "steinfix/cli/config.hpp"
#include "steinfix/cli/report.hpp"

namespace steinfix::cli {

/// Dispatches a validated config to the module operations and writes
/// report records to the stream. Returns the exit code: 0 on success,
/// 1 on computation error (an ERROR record and a RESULT line are still
/// written). Configuration errors are thrown before this point.
int run_command(const RunConfig& cfg, std::ostream& report);

}  // namespace steinfix::cli
