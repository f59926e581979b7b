#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace bicext::cli {

enum class Status { Pass, Fail, Result };

std::string to_string(Status s);

/// Outcome of one invocation. `text` is what goes to stdout (human-readable,
/// or the canonical JSON document under --json); `diagnostic` goes to stderr.
/// exit_code is 0 for pass/result, 1 for fail and 2 for usage or input errors.
struct Report {
  Status status = Status::Result;
  nlohmann::json payload;
  std::string text;
  int exit_code = 0;
  std::string diagnostic;
};

/// The canonical JSON document: {"payload": ..., "status": ...}.
nlohmann::json to_json(const Report& r);

/// Arguments exclude the program name.
Report run(const std::vector<std::string>& args);

/// Runs, prints the report to `out` / `err` and returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bicext::cli
