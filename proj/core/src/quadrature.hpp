#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <sstream>

#include "drharm/errors.hpp"

namespace drharm::detail {

template <class T>
struct QuadratureResult {
  T value;
  double error;
};

// Adaptive 15-point Gauss-Kronrod on [a, b]. Accepts the result when the
// reported error is below max(rel_tol * integral of |f|, abs_tol), so
// integrals that cancel to zero are judged against the size of f. Boost
// accepts subintervals locally; when the summed estimate misses the global
// target the local tolerance is tightened and the integral redone.
template <class F>
auto integrate(F&& f, double a, double b, double rel_tol, double abs_tol = 1e-14,
               unsigned max_depth = 20) {
  using T = decltype(f(a));
  using std::abs;
  double error = 0.0;
  double l1 = 0.0;
  T value{};
  double local_tol = rel_tol;
  for (int attempt = 0; attempt < 4; ++attempt) {
    value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, local_tol, &error, &l1);
    const double target = std::max(rel_tol * std::max(abs(value), l1), abs_tol);
    if (error <= target && std::isfinite(abs(value))) return QuadratureResult<T>{value, error};
    if (!std::isfinite(abs(value)) || local_tol <= 1e-15) break;
    local_tol = std::max(local_tol * 0.01, 1e-15);
  }
  std::ostringstream os;
  os << "adaptive quadrature on [" << a << ", " << b
     << "] did not converge; achieved error estimate " << error;
  throw QuadratureError(os.str(), error);
}

}  // namespace drharm::detail
