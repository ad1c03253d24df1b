#pragma once

#include <complex>

#include "drharm/geometry.hpp"
#include "drharm/hypergeom.hpp"

namespace drharm {

/// A spectral parameter lambda together with a lambda-derivative order k.
struct SpectralPoint {
  std::complex<double> lambda;
  int k = 0;
};

inline constexpr double kMaxRadius = 10.0;
inline constexpr double kMaxImagLambda = 50.0;
inline constexpr int kMaxDerivativeOrder = 4;

/// phi_lambda^(p,q)(r) = F(rho - i lambda, rho + i lambda; n/2; -sinh^2(r/2)),
/// for 0 <= r <= 10 and |Im lambda| <= 50. phi(0) is exactly 1.
std::complex<double> phi(const SpaceParams& params, std::complex<double> lambda, double r,
                         const SeriesOptions& options = {});

/// Same as phi, with the series diagnostics.
EvalReport phi_report(const SpaceParams& params, std::complex<double> lambda, double r,
                      const SeriesOptions& options = {});

/// k-th lambda-derivative of phi_lambda(r), 0 <= k <= 4, by Taylor
/// arithmetic in lambda through the series.
std::complex<double> phi_dk(const SpaceParams& params, const SpectralPoint& point, double r,
                            const SeriesOptions& options = {});

/// Euclidean counterpart: d^k/dlambda^k cos(lambda t) = t^k cos(lambda t + k pi/2).
std::complex<double> psi(const SpectralPoint& point, double t);

struct OdeOptions {
  double rel_tol = 1e-12;
  /// phi decays like e^(-rho r); the absolute part must stay far below that.
  double abs_tol = 1e-30;
  long max_steps = 1000000;
};

/// Independent evaluation of phi_lambda(r) by integrating the radial
/// eigenvalue equation
///   u'' + (((p+q)/2) coth(r/2) + (q/2) tanh(r/2)) u' = -(lambda^2 + rho^2) u
/// from r0 = 1e-3 with a fourth order Frobenius start and an adaptive
/// Runge-Kutta-Fehlberg 7(8) stepper. Does not touch the series code.
std::complex<double> phi_ode_oracle(const SpaceParams& params, std::complex<double> lambda,
                                    double r, const OdeOptions& options = {});

}  // namespace drharm
