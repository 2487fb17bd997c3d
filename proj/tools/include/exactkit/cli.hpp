#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace exactkit::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. A literal argument
/// given as "-" is read from `in`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

/// dispatch() with captured streams.
Run run(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace exactkit::cli
