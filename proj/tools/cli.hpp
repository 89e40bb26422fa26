#pragma once

#include <iosfwd>

namespace econthermo::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kValidationFailure = 2 };

/// Entry point shared by the executable and the tests.
///
///   econthermo carnot|vdw|catastrophe [subcommand] [--config FILE] [--out DIR] [flags]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace econthermo::cli
