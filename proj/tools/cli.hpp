#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmt::cli {

enum ExitCode { kOk = 0, kWitness = 1, kUsage = 2, kViolation = 3 };

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmt::cli
