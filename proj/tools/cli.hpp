#pragma once

#include <ostream>

namespace genfact::cli {

/// Exit codes: 0 pass, 1 property failure, 2 usage error, 3 uncertified
/// result without --allow-uncertified.
enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsage = 2, kUncertified = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genfact::cli
