#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stepwise {

/// Malformed constructor input: self-loop, duplicate edge, vertex out of range.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A metric or a theorem checker was handed a disconnected graph.
class NotConnected : public std::domain_error {
 public:
  NotConnected() : std::domain_error("infinite metric: graph is disconnected") {}
  explicit NotConnected(const std::string& what) : std::domain_error(what) {}
};

/// The graph is not k-stepwise irregular for the requested step.
class NotStepwise : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size ceiling (canonicalization or enumeration) was exceeded.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parse failure in an interchange format. `position()` is a byte offset
/// within the offending line (graph6) or a 1-based line number (text formats).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t position)
      : std::runtime_error(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stepwise
