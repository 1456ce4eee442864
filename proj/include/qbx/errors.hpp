#pragma once

#include <stdexcept>
#include <string>

namespace qbx {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical/syntax/semantic problem in an input file; position is 1-based
// (0 when unknown).
struct parse_error : error {
  parse_error(const std::string& msg, int line = 0, int col = 0)
      : error(line > 0 ? std::to_string(line) + ":" + std::to_string(col) + ": " + msg : msg),
        line(line),
        col(col) {}
  int line = 0;
  int col = 0;
};

// Structurally invalid input (bad presentation, out-of-range spec, ...).
struct validation_error : error {
  using error::error;
};

// A computation could not be carried out (division by zero, mixed fields,
// non-finite-dimensional quotient within the length cap, ...).
struct compute_error : error {
  using error::error;
};

}  // namespace qbx
