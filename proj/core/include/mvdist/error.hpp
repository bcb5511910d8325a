#pragma once

#include <stdexcept>
#include <string>

namespace mvdist {

enum class ErrorKind {
  parse,        // malformed input file or value
  containment,  // a body is not contained in the reference body
  config,       // invalid options or schedule
  domain,       // precondition violated (dimension mismatch, zero direction, ...)
  internal,     // an internal consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mvdist
