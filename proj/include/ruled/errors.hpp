#pragma once

#include <stdexcept>
#include <string>

namespace ruled {

// Root of every error thrown by the library.  The CLI maps the
// InternalConsistencyError branch to exit code 3 and everything else to 1.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ModelMismatch : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

// Input lies outside the positive cone or another domain the operation is
// defined on.
class DomainError : public Error {
  public:
    using Error::Error;
};

class UnsupportedReflection : public Error {
  public:
    using Error::Error;
};

class UnsupportedLabel : public Error {
  public:
    using Error::Error;
};

class PresentationViolation : public Error {
  public:
    using Error::Error;
};

// The SW inequality is only meaningful for k >= 2.
class OutOfRegime : public Error {
  public:
    using Error::Error;
};

class OutOfScope : public Error {
  public:
    using Error::Error;
};

class InternalConsistencyError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace ruled
