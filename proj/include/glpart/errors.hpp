#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace glp {

using Vertex = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's domain (bad vertex id,
// non-edge, malformed request).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A structural precondition of a solver does not hold. `kind` is a short
// machine-readable tag ("not-chordal", "not-k-connected", "not-in-class",
// "demand-sum", ...) and `witness` lists the vertices that explain it.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string kind, const std::string& what,
                    std::vector<Vertex> witness = {})
      : Error(what), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::vector<Vertex> witness_;
};

// A runtime-checked invariant fired. Indicates either a bug or an input that
// silently violated a skipped precondition.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// An exponential routine was asked to run above its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace glp
