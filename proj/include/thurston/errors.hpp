#pragma once

#include <stdexcept>
#include <string>

namespace thurston {

/// Malformed input document or value (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input that violates an operation's precondition (exit code 3).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A configured search budget was exceeded (exit code 4).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace thurston
