#pragma once

#include <stdexcept>
#include <string>

namespace rdaopt {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed expression or scenario text. `offset` is a byte offset into the
// offending source when known, or std::string::npos.
struct ParseError : Error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : Error(msg), offset(off) {}
};

// Expression evaluation failure (division by zero), tagged with the point.
struct EvalError : Error {
  double x, t;
  EvalError(double x_, double t_, const std::string& msg)
      : Error(msg), x(x_), t(t_) {}
};

// A precondition or invariant on inputs does not hold.
struct ValidationError : Error {
  using Error::Error;
};

// A solve blew up: stability violation, non-finite value, negative density.
struct SolverError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace rdaopt
