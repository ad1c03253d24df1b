#pragma once

#include <complex>
#include <functional>
#include <string_view>

#include "drharm/geometry.hpp"
#include "drharm/hypergeom.hpp"

namespace drharm {

/// The three radial distribution families T_r:
///   Ball:      <T_r, f> = integral of f over B_r
///   Sphere:    <T_r, f> = integral of f over S_r
///   MeanValue: <T_r, f> = (1 / vol S_r) integral of f over S_r  -  f(e)
enum class DistKind { Ball, Sphere, MeanValue };

std::string_view to_string(DistKind kind);
/// Accepts "ball", "sphere", "mean" (also "meanvalue", "mean-value").
DistKind parse_dist_kind(std::string_view text);

enum class TransformMethod { ClosedForm, Quadrature };

/// A value of the spherical Fourier transform FT(lambda) = <T, phi_lambda>.
struct TransformValue {
  std::complex<double> value;
  TransformMethod method = TransformMethod::ClosedForm;
  double est_error = 0.0;
};

/// vol(S_r) phi_lambda(r).
TransformValue sphere_transform(const SpaceParams& params, double r, std::complex<double> lambda,
                                const SeriesOptions& options = {});

/// Closed form of the ball transform,
///   (2^n pi^(n/2) / Gamma(1 + n/2)) sinh^n(r/2) cosh^(q+1)(r/2) phi_lambda^(p,q+2)(r).
TransformValue ball_transform(const SpaceParams& params, double r, std::complex<double> lambda,
                              const SeriesOptions& options = {});

/// Ball transform as the radial integral of sphere_area(s) phi_lambda(s) over
/// [0, r]; an oracle for the closed form.
TransformValue ball_transform_quadrature(const SpaceParams& params, double r,
                                         std::complex<double> lambda, double rel_tol = 1e-10);

/// phi_lambda(r) - 1: pairing the mean-value distribution with phi_lambda and
/// using phi_lambda(e) = 1.
TransformValue mean_value_transform(const SpaceParams& params, double r,
                                    std::complex<double> lambda,
                                    const SeriesOptions& options = {});

TransformValue transform(DistKind kind, const SpaceParams& params, double r,
                         std::complex<double> lambda, const SeriesOptions& options = {});

/// The scale used to make a transform value dimensionless: vol(B_r),
/// vol(S_r) or 1.
double distribution_scale(DistKind kind, const SpaceParams& params, double r);

using SpectralFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Convolution of radial distributions is the pointwise product of their
/// transforms.
SpectralFunction convolve_spectral(SpectralFunction f, SpectralFunction g);

/// Transform of the unit of convolution, delta_e.
SpectralFunction delta_transform();

struct SpectralGrid {
  double re_max = 40.0;
  double im_max = 10.0;
  int re_points = 81;
  int im_points = 21;
};

struct PaleyWienerReport {
  /// max over the grid of |F| / ((1 + |lambda|)^m e^(R |Im lambda|)).
  double c_star = 0.0;
  /// Same maximum restricted to the outer ring of the grid and to the rest.
  double boundary_max = 0.0;
  double interior_max = 0.0;
  double trend_ratio = 0.0;
  double trend_limit = 0.0;
  bool passed = false;
};

/// Empirical exponential-type check. Passes when C* is finite and the
/// normalized size on the grid boundary does not exceed the interior maximum
/// by more than e^(0.1 R). Evaluations run on `threads` workers; the
/// reduction order is fixed.
PaleyWienerReport paley_wiener_check(const SpectralFunction& f, double R, int m,
                                     const SpectralGrid& grid = {}, int threads = 1);

}  // namespace drharm
