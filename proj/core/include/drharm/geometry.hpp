#pragma once

#include <compare>

namespace drharm {

/// The pair (p, q) of a Damek-Ricci space X^(p,q): p = dim v, q = dim z.
/// Every pair of nonnegative integers is accepted as a formal parameter;
/// (0, 0) is the real line.
class SpaceParams {
 public:
  SpaceParams() = default;
  SpaceParams(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  /// Manifold dimension n = p + q + 1.
  int dimension() const noexcept { return p_ + q_ + 1; }

  /// rho = p/4 + q/2. Exact in binary floating point.
  double rho() const noexcept { return p_ / 4.0 + q_ / 2.0; }

  /// Third hypergeometric parameter n/2.
  double half_dimension() const noexcept { return dimension() / 2.0; }

  /// (p, q + 2): the parameters of the spherical function that appears in
  /// the ball transform.
  SpaceParams ball_shift() const { return SpaceParams(p_, q_ + 2); }

  auto operator<=>(const SpaceParams&) const = default;

 private:
  int p_ = 0;
  int q_ = 0;
};

/// Gamma(m / 2) for a positive integer m, by recursion from Gamma(1/2) and
/// Gamma(1).
double gamma_half_integer(int m);

/// Surface area of the geodesic sphere of radius r:
///   (2^n pi^(n/2) / Gamma(n/2)) sinh^(p+q)(r/2) cosh^q(r/2).
double sphere_area(const SpaceParams& params, double r);

/// log of sphere_area, usable far beyond the range where the area overflows.
double log_sphere_area(const SpaceParams& params, double r);

/// Volume of the geodesic ball, by adaptive Gauss-Kronrod integration of the
/// sphere area. Throws QuadratureError if the tolerance is not reached.
double ball_volume(const SpaceParams& params, double r, double rel_tol = 1e-10);

/// Isoperimetric Cheeger constant 2 rho.
double cheeger(const SpaceParams& params);

/// log(sphere_area(r)) / r, which tends to 2 rho.
double log_growth_estimate(const SpaceParams& params, double r);

}  // namespace drharm
