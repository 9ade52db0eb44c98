#pragma once

#include <stdexcept>
#include <string>

namespace pcolor {

/// Root of the library's exception hierarchy.  Precondition violations and
/// malformed inputs throw subclasses of this; mathematical verdicts (axiom
/// failures, unmet theorem hypotheses, ...) are returned as report data, not
/// thrown.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing scalars (or algebras and scalars) that live over different fields.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

/// Division or inversion by the zero scalar.
class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Group elements with the wrong number of coordinates for their group.
class SpecMismatch : public Error {
public:
  using Error::Error;
};

/// Subspace operations on operands with different ambient spaces.
class AmbientMismatch : public Error {
public:
  using Error::Error;
};

/// Structural validation failure while building an algebra or parsing a file.
/// `path` is a JSON-pointer-ish locator of the offending entry ("" if n/a).
class ValidationError : public Error {
public:
  ValidationError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(path) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// Parse failure of an algebra definition file.
class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Request for a bundled example under a name that does not exist.
class UnknownExample : public Error {
public:
  using Error::Error;
};

}  // namespace pcolor
