#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pilab {

enum class ErrorKind {
  dimension_mismatch,
  associativity_violation,
  unit_violation,
  not_nilpotent_radical,
  not_semisimple,
  not_invariant,
  not_split,
  lifting_failed,
  averaging_unavailable,
  not_homomorphism,
  wrong_morphism_type,
  not_diagonalizable,
  no_integral,
  not_bimodule_projection,
  resource_exceeded,
  feasibility_limit,
  not_h_simple,
  non_integral_multiplicity,
  guard_exceeded,
  parse_error,
  validation_error,
  postcondition_failed,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class AssociativityViolation : public Error {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k,
                         const std::string& lhs, const std::string& rhs);

  std::size_t i, j, k;
  std::string lhs, rhs;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::parse_error,
              line ? "parse error (line " + std::to_string(line) + "): " + message
                   : "parse error: " + message),
        line(line) {}

  std::size_t line;
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& checker, const std::string& detail)
      : Error(ErrorKind::validation_error,
              "validation failed [" + checker + "]: " + detail),
        checker(checker) {}

  std::string checker;
};

/// Raised when a computation would exceed the configured entry cap.
class ResourceExceeded : public Error {
 public:
  ResourceExceeded(const std::string& what, double requested, double cap)
      : Error(ErrorKind::resource_exceeded,
              what + " needs " + format_count(requested) + " entries, cap is " +
                  format_count(cap)),
        requested(requested) {}

  double requested;

 private:
  static std::string format_count(double v);
};

}  // namespace pilab
