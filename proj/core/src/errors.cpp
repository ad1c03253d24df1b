#include "drharm/errors.hpp"

namespace drharm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::ContourTooClose: return "ContourTooClose";
    case ErrorKind::JetDepth: return "JetDepthError";
    case ErrorKind::CalibrationInconsistent: return "CalibrationInconsistent";
    case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorKind::NotEnoughZeros: return "NotEnoughZeros";
  }
  return "Unknown";
}

void throw_domain(const std::string& what) {
  throw Error(ErrorKind::InvalidDomain, what);
}

}  // namespace drharm
