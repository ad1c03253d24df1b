#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace drharm::test {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace drharm::test
