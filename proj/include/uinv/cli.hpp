#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uinv::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kGuard = 2,
    kNotInOmega = 3,
    kMixedSizes = 4,
    kBadInput = 5,
    kNonGeneric = 6,
};

/// Default size limits; --force lifts them.
inline constexpr int kGenGuard = 4;
inline constexpr int kVerifyGuard = 6;
inline constexpr int kBenchGuard = 6;
inline constexpr int kNumericGuard = 12;

/// Runs the command line (args excludes the program name). All user-visible
/// output goes to `out` or, with --out, to the named file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uinv::cli
