#include "drharm/spherical.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "drharm/errors.hpp"

namespace drharm {
namespace {

void check_caps(std::complex<double> lambda, double r) {
  if (!(r >= 0.0) || !(r <= kMaxRadius)) {
    throw_domain("radius must lie in [0, 10], got " + std::to_string(r));
  }
  if (!std::isfinite(lambda.real()) || !(std::abs(lambda.imag()) <= kMaxImagLambda)) {
    throw_domain("spectral parameter must be finite with |Im lambda| <= 50");
  }
}

double hyp_argument(double r) {
  const double s = std::sinh(r / 2);
  return -s * s;
}

}  // namespace

EvalReport phi_report(const SpaceParams& params, std::complex<double> lambda, double r,
                      const SeriesOptions& options) {
  check_caps(lambda, r);
  if (r == 0.0) return {{1.0, 0.0}, 1, 0.0, 16};
  return f21_neg_conjpair(params.rho(), lambda, params.half_dimension(), hyp_argument(r),
                          options);
}

std::complex<double> phi(const SpaceParams& params, std::complex<double> lambda, double r,
                         const SeriesOptions& options) {
  return phi_report(params, lambda, r, options).value;
}

std::complex<double> phi_dk(const SpaceParams& params, const SpectralPoint& point, double r,
                            const SeriesOptions& options) {
  check_caps(point.lambda, r);
  if (point.k < 0 || point.k > kMaxDerivativeOrder) {
    throw_domain("derivative order must lie in [0, 4]");
  }
  if (r == 0.0) return point.k == 0 ? 1.0 : 0.0;
  const LambdaDerivatives d = f21_conjpair_lambda_derivatives(
      params.rho(), point.lambda, params.half_dimension(), hyp_argument(r), point.k, options);
  return d.derivatives[point.k];
}

std::complex<double> psi(const SpectralPoint& point, double t) {
  if (point.k < 0 || point.k > kMaxDerivativeOrder) {
    throw_domain("derivative order must lie in [0, 4]");
  }
  const std::complex<double> x = point.lambda * t;
  std::complex<double> base;
  switch (point.k % 4) {
    case 0: base = std::cos(x); break;
    case 1: base = -std::sin(x); break;
    case 2: base = -std::cos(x); break;
    default: base = std::sin(x); break;
  }
  return std::pow(t, point.k) * base;
}

std::complex<double> phi_ode_oracle(const SpaceParams& params, std::complex<double> lambda,
                                    double r, const OdeOptions& options) {
  if (!(r > 0.0) || !(r <= kMaxRadius)) {
    throw_domain("ODE oracle radius must lie in (0, 10], got " + std::to_string(r));
  }
  using State = std::array<std::complex<double>, 2>;
  const double rho = params.rho();
  const double n = params.dimension();
  const double m = params.p() + params.q();
  const double q = params.q();
  const std::complex<double> mu = lambda * lambda + rho * rho;

  // Frobenius start at the regular singular point: u = 1 + c2 r^2 + c4 r^4,
  // using A'/A = (n-1)/r + beta r + O(r^3).
  const double beta = m / 12.0 + q / 4.0;
  const std::complex<double> c2 = -mu / (2.0 * n);
  const std::complex<double> c4 = -c2 * (2.0 * beta + mu) / (4.0 * (n + 2.0));
  const double r0 = 1e-3;
  auto frobenius = [&](double s) -> State {
    return {1.0 + c2 * s * s + c4 * s * s * s * s, 2.0 * c2 * s + 4.0 * c4 * s * s * s};
  };
  if (r <= r0) return frobenius(r)[0];

  auto rhs = [&](const State& u, State& du, double s) {
    const double log_deriv = 0.5 * m / std::tanh(s / 2) + 0.5 * q * std::tanh(s / 2);
    du[0] = u[1];
    du[1] = -log_deriv * u[1] - mu * u[0];
  };

  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                         odeint::runge_kutta_fehlberg78<State>());
  State u = frobenius(r0);
  double s = r0;
  double dt = 1e-3;
  long steps = 0;
  while (s < r) {
    if (s + dt > r) dt = r - s;
    if (dt < 1e-14 * std::max(1.0, s)) {
      std::ostringstream os;
      os << "ODE step size underflow at r = " << s;
      throw Error(ErrorKind::StepUnderflow, os.str());
    }
    if (stepper.try_step(rhs, u, s, dt) == odeint::success) {
      if (++steps > options.max_steps) {
        throw Error(ErrorKind::StepUnderflow, "ODE oracle exceeded its step budget");
      }
    }
  }
  return u[0];
}

}  // namespace drharm
