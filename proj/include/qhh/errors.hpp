// Error taxonomy shared across the library; the CLI maps each type to its
// exit code (parse 1, semantic 2, identity mismatch 3, budget 4).
#pragma once

#include <stdexcept>
#include <string>

namespace qhh {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical identity the tool promises failed to hold on this input.
struct IdentityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds a computation budget (the result is not wrong, just not
// computed).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qhh
