#ifndef CANTOR_ERRORS_HPP
#define CANTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cantor {

// Malformed literal text. CLI exit code 1.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input violating a precondition or an invariant
// (prime mismatch, non-normalized value, out-of-range argument).
// CLI exit code 2.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Subcover extraction ran out of steps; a non-cover and a too-small
// budget are indistinguishable. CLI exit code 3.
struct budget_exhausted : std::runtime_error {
  explicit budget_exhausted(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cantor

#endif
