#pragma once

#include <stdexcept>
#include <string>

namespace hamint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Face or ridge with the wrong number of vertices.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Vertex label or index outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a pure complex.
class PurityError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a configured search or size cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, int value, int cap, const std::string& flag)
      : Error(what + ": " + std::to_string(value) + " exceeds cap " + std::to_string(cap) +
              " (raise with " + flag + ")"),
        cap_(cap) {}
  /// Fixed cap with no flag to raise it.
  CapacityError(const std::string& what, int value, int cap)
      : Error(what + ": " + std::to_string(value) + " exceeds fixed cap " + std::to_string(cap)), cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A lemma or construction whose hypotheses do not apply to the given input.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace hamint
