#pragma once

#include <stdexcept>
#include <string>

namespace starplanar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural violations found while building a StarGraph.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Graph text could not be parsed; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive search would exceed its configured ceiling.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Operation requires degrees 4 or 6.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class NotPlanar : public Error {
 public:
  using Error::Error;
};

class ContractionFailed : public Error {
 public:
  using Error::Error;
};

// Raised when an obstruct in the expansion does not lift. Carries the lifted
// partition so the failure can be inspected.
class LiftingFailed : public Error {
 public:
  LiftingFailed(const std::string& what, std::string partition)
      : Error(what), partition_(std::move(partition)) {}
  const std::string& partition() const { return partition_; }

 private:
  std::string partition_;
};

}  // namespace starplanar
