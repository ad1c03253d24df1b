#include "drharm/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "drharm/errors.hpp"
#include "quadrature.hpp"

namespace drharm {

SpaceParams::SpaceParams(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) {
    throw_domain("space parameters must be nonnegative, got (" +
                 std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

double gamma_half_integer(int m) {
  if (m <= 0) throw_domain("gamma_half_integer needs m > 0");
  // Gamma(x + 1) = x Gamma(x), starting from Gamma(1/2) or Gamma(1).
  double value = (m % 2 == 1) ? std::sqrt(std::numbers::pi) : 1.0;
  for (int j = (m % 2 == 1) ? 1 : 2; j < m; j += 2) value *= j / 2.0;
  return value;
}

namespace {

double area_constant(const SpaceParams& params) {
  const int n = params.dimension();
  return std::pow(2.0, n) * std::pow(std::numbers::pi, n / 2.0) /
         gamma_half_integer(n);
}

void require_positive_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw_domain("radius must be positive and finite, got " + std::to_string(r));
  }
}

}  // namespace

double sphere_area(const SpaceParams& params, double r) {
  require_positive_radius(r);
  return area_constant(params) * std::pow(std::sinh(r / 2), params.p() + params.q()) *
         std::pow(std::cosh(r / 2), params.q());
}

double log_sphere_area(const SpaceParams& params, double r) {
  require_positive_radius(r);
  const double h = r / 2;
  // log sinh(h) = h + log1p(-exp(-2h)) - log 2, stable for large h.
  const double log_sinh = h + std::log1p(-std::exp(-2 * h)) - std::numbers::ln2;
  const double log_cosh = h + std::log1p(std::exp(-2 * h)) - std::numbers::ln2;
  return std::log(area_constant(params)) + (params.p() + params.q()) * log_sinh +
         params.q() * log_cosh;
}

double ball_volume(const SpaceParams& params, double r, double rel_tol) {
  require_positive_radius(r);
  auto area = [&](double s) {
    return s <= 0.0 ? (params.dimension() == 1 ? 2.0 : 0.0) : sphere_area(params, s);
  };
  return detail::integrate(area, 0.0, r, rel_tol).value;
}

double cheeger(const SpaceParams& params) { return 2.0 * params.rho(); }

double log_growth_estimate(const SpaceParams& params, double r) {
  return log_sphere_area(params, r) / r;
}

}  // namespace drharm
