#pragma once

#include <comod/instance.hpp>

namespace comod {

// Raised for problems with the request itself (unknown verbs or names,
// missing flags); callers map it to exit code 2 alongside ParseError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliRequest {
  std::string verb;  // validate | compute | check | adjunction | hull |
                     // rationalize | generators
  std::string sub;   // sub-verb of compute / check / adjunction
  std::string input;
  std::string output = "text";  // or "json"
  std::string at, object, pairing, left, right, module;
};

struct CliResult {
  int code = 0;      // 0 all checks pass, 1 some check fails, 2 usage/parse
  std::string text;  // rendered report, or the error message on code 2
};

// Runs the request against an already-parsed document.
CliResult run_request(const InstanceDocument& doc, const CliRequest& req);

// Loads req.input, then runs; parse and usage errors become code-2 results.
CliResult run_request(const CliRequest& req);

}  // namespace comod
