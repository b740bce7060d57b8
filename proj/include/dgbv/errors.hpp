#pragma once

#include <stdexcept>
#include <string>

namespace dgbv {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Index out of range or otherwise invalid element data.
class MalformedElement : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Operator entry that contradicts the declared parity or bidegree shift.
class GradingViolation : public Error {
public:
  using Error::Error;
};

/// Text or JSON input that cannot be parsed. `path` names the offending member.
class ParseError : public Error {
public:
  ParseError(std::string path, const std::string& reason)
      : Error(path.empty() ? reason : path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// Input parsed but failed validation. Carries the rendered report text.
class ValidationFailure : public Error {
public:
  using Error::Error;
};

/// The element handed to twist does not satisfy the Maurer-Cartan conditions.
class McViolation : public Error {
public:
  using Error::Error;
};

/// A required preimage does not exist, or harmonic representatives cannot be
/// chosen. Signals that the deformation hypotheses fail for this input.
class Obstruction : public Error {
public:
  using Error::Error;
};

/// The pairing induced on cohomology is degenerate.
class NotNice : public Error {
public:
  using Error::Error;
};

/// A structural check on a computed object failed (signals a sign bug).
class CheckFailure : public Error {
public:
  using Error::Error;
};

/// An operation was called on input that does not meet its preconditions.
class PreconditionFailure : public Error {
public:
  using Error::Error;
};

}  // namespace dgbv
