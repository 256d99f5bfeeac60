#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wellblock {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A single violated invariant: which field, which constraint, and the offending values.
struct Violation {
  std::string field;
  std::string constraint;
  std::string detail;
};

class DomainError : public Error {
 public:
  DomainError(std::string field, std::string constraint, std::string detail = {});
  explicit DomainError(std::vector<Violation> violations);

  const std::string& field() const { return violations_.front().field; }
  const std::string& constraint() const { return violations_.front().constraint; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Sampled (x, f(x)) pairs gathered while searching for a sign change.
using ScanTrace = std::vector<std::pair<double, double>>;

class NoSignChange : public Error {
 public:
  NoSignChange(std::string what, ScanTrace trace);
  const ScanTrace& trace() const { return trace_; }

 private:
  ScanTrace trace_;
};

class MaxIterExceeded : public Error {
 public:
  MaxIterExceeded(double lo, double hi);
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

class RootOutsidePhysicalRange : public Error {
 public:
  RootOutsidePhysicalRange(double root, double lo, double hi);
  double root() const { return root_; }

 private:
  double root_;
};

class EigenBracketError : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

class DivisionByNearZero : public Error {
 public:
  using Error::Error;
};

class StabilityViolation : public Error {
 public:
  using Error::Error;
};

class NonFiniteDetected : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace wellblock
