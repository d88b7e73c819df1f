#pragma once

#include <stdexcept>
#include <string>

namespace hankelcf {

// Bad user-supplied input (expression syntax, malformed JSON, unknown names).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition of an operation was violated by the caller
// (division by zero, mismatched fields, insufficient prefix data, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Valid input that falls outside the supported cases
// (e.g. the square-root case over F_2, or an equation matching no case).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed (non-exact division, certificate mismatch).
// Indicates a bug; callers must not swallow it.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace hankelcf
