#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

// Categories map one-to-one onto the status codes of the C API.
enum class ErrorKind {
  Parse,       // malformed input text (JSON, ring string, expression)
  Validation,  // well-formed input violating a structural invariant
  Argument,    // precondition of an operation violated
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based position in the offending input text; 0 when not applicable.
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

[[noreturn]] inline void throw_argument(const std::string& what) {
  throw Error(ErrorKind::Argument, what);
}

[[noreturn]] inline void throw_validation(const std::string& what, int line = 0,
                                          int column = 0) {
  throw Error(ErrorKind::Validation, what, line, column);
}

}  // namespace leavitt
