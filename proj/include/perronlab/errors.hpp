#pragma once

#include <stdexcept>
#include <string>

namespace perronlab {

// Error kinds map onto the CLI exit codes: invalid_input -> 2,
// search_failure and budget_exceeded -> 3, precision_exhausted -> 4.
enum class ErrorKind {
  invalid_input,
  search_failure,
  precision_exhausted,
  budget_exceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::invalid_input: return 2;
      case ErrorKind::search_failure: return 3;
      case ErrorKind::budget_exceeded: return 3;
      case ErrorKind::precision_exhausted: return 4;
    }
    return 1;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorKind::invalid_input, msg);
}
[[noreturn]] inline void throw_search_failure(const std::string& msg) {
  throw Error(ErrorKind::search_failure, msg);
}
[[noreturn]] inline void throw_precision_exhausted(const std::string& msg) {
  throw Error(ErrorKind::precision_exhausted, msg);
}
[[noreturn]] inline void throw_budget_exceeded(const std::string& msg) {
  throw Error(ErrorKind::budget_exceeded, msg);
}

}  // namespace perronlab
