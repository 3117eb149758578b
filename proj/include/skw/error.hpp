#pragma once

#include <stdexcept>
#include <string>

namespace skw {

enum class ErrorCode {
  no_cube_root,
  unsupported_field,
  bad_prime,
  division_by_zero,
  invalid_presentation,
  non_quadratic,
  dependent_relations,
  parse_error,
  needs_deeper_completion,
  invalid_automorphism,
  no_extension,
  too_large,
  not_implemented,
  invalid_argument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::no_cube_root: return "no-cube-root";
    case ErrorCode::unsupported_field: return "unsupported-field";
    case ErrorCode::bad_prime: return "bad-prime";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::invalid_presentation: return "invalid-presentation";
    case ErrorCode::non_quadratic: return "non-quadratic";
    case ErrorCode::dependent_relations: return "dependent-relations";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::needs_deeper_completion: return "needs-deeper-completion";
    case ErrorCode::invalid_automorphism: return "invalid-automorphism";
    case ErrorCode::no_extension: return "no-extension";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::not_implemented: return "not-implemented";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skw
