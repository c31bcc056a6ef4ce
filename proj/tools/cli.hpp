#pragma once

#include <iosfwd>

namespace minhom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNoHomomorphism = 1,
  kNpcTarget = 2,
  kInputError = 3,
  kSelfCheckFailure = 4,
};

// Full command-line entry point; argv[0] is the program name. Results go to
// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace minhom::cli
