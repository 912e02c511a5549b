#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbtool {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbtool
