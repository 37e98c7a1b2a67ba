#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkcli {

// Bad command line; the message names the offending flag.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class OutputMode { Text, Json };

struct Invocation {
  std::string subcommand; // uniruled, coeff, table, series, fano verify, sweep
  std::map<std::string, std::string> options;
  OutputMode output_mode = OutputMode::Text;
  std::string help; // nonempty when --help was requested
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Throws UsageError.
Invocation parse(const std::vector<std::string>& args);

// Writes the result to `out` and diagnostics to `err`; returns the exit code.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

// parse + run with usage errors mapped to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hkcli
