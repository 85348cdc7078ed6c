#pragma once

#include <stdexcept>
#include <string>

namespace gasketwalk {

/// A move that violates the stacking rule or does not apply to the state.
class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Disk count beyond the limit of the requested representation or solver.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear solve did not produce a solution (singular system or iteration cap).
class SolveFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPositiveResistance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientTrials : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSequence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; remembers the 1-based line it choked on.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace gasketwalk
