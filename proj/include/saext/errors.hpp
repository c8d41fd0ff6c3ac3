#pragma once

#include <stdexcept>
#include <string>

namespace saext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the interval [-a, a] or otherwise outside an operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// Malformed or out-of-family parameters (potential descriptors, BC families, configs).
struct ParameterError : Error {
  using Error::Error;
};

/// Malformed command line or configuration file.
struct UsageError : Error {
  using Error::Error;
};

struct ParityError : Error {
  using Error::Error;
};

struct ModeError : Error {
  using Error::Error;
};

struct GridError : Error {
  using Error::Error;
};

struct CertificationError : Error {
  using Error::Error;
};

/// A matrix that the theory guarantees to be regular tested singular.
struct SingularMatrixError : Error {
  using Error::Error;
};

struct UniquenessError : Error {
  using Error::Error;
};

struct DegeneracyError : Error {
  using Error::Error;
};

/// A post-construction invariant check failed.
struct InvariantError : Error {
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double abscissa)
      : Error(what + " at x = " + std::to_string(abscissa)), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace saext
