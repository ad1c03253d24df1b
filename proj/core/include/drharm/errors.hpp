#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drharm {

enum class ErrorKind {
  InvalidDomain,
  NonConvergence,
  QuadratureFailure,
  StepUnderflow,
  ContourTooClose,
  JetDepth,
  CalibrationInconsistent,
  UnsupportedParameters,
  NotEnoughZeros,
};

std::string_view to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is stable and
/// is what the command line tool maps to exit codes and error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A series or iteration stopped at its cap. Carries what was reached.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::complex<double> partial,
                      double est_error)
      : Error(ErrorKind::NonConvergence, what),
        partial_(partial),
        est_error_(est_error) {}

  std::complex<double> partial() const noexcept { return partial_; }
  double est_error() const noexcept { return est_error_; }

 private:
  std::complex<double> partial_;
  double est_error_;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(ErrorKind::QuadratureFailure, what),
        achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

[[noreturn]] void throw_domain(const std::string& what);

}  // namespace drharm
