#pragma once

#include <stdexcept>
#include <string>

namespace fpd {

// Error taxonomy shared by the library and the CLI.
// The CLI maps these to exit codes: parameter 2, resource 3, parse 4.

struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                       : msg),
        line(line_no) {}
  int line;
};

}  // namespace fpd
