#ifndef MATCUT_ERRORS_HPP
#define MATCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matcut {

// Exit codes shared by the CLI and the error taxonomy below.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitContract = 4;
constexpr int kExitPartial = 5;
constexpr int kExitNumerical = 6;

// A precondition or type invariant was violated by the caller.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative scheme failed to reach its certified tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line = 0;
  int column = 0;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ContractViolation*>(&e)) return kExitContract;
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const NumericalError*>(&e)) return kExitNumerical;
  return 1;
}

}  // namespace matcut

#endif
