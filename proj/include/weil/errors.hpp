#pragma once

#include <stdexcept>
#include <string>

namespace weil {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its mathematical domain
/// (division by zero, zero polynomial, infeasible parameter, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Resultant arithmetic would exceed the configured composite-degree cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("composite degree " + std::to_string(degree) + " exceeds cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// A projective point has a block shape the height routines cannot handle.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed. `where` points at the offending
/// field (JSON pointer) or character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : what + " (at " + where + ")"), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace weil
