#pragma once

#include <stdexcept>
#include <string>

namespace hypconj {

// Malformed input text: words, group files, word-list files.
// Messages cite the offending position or line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A group definition that cannot be used as configured (invalid rules,
// delta < 1, paper-profile bounds beyond the hard budget, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration outgrew its configured node or word budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A practical-profile cap was reached before a verdict; callers translate
// this into an unverified-at-cap outcome rather than a hard failure.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A condition the underlying theory guarantees did not hold. Indicates a
// wrong delta, a non-confluent rule file, or a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Always-on invariant check (independent of NDEBUG).
inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace hypconj
