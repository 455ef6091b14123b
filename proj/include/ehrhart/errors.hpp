#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

// Base of every error raised by the library. The CLI maps the subclasses
// onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, polytope files, structured reports).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Out-of-domain parameters (e.g. a construction with s not dividing D).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Degenerate or inconsistent geometry: collinear polygons, empty segments,
// facets violated by vertices.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Enumeration refused because the bounding box is above the cell limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Interpolation failed or extra samples disagree with the fitted model.
class FitError : public Error {
 public:
  using Error::Error;
};

// A proved relationship failed to hold on computed data; always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ehrhart
